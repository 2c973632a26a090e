use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable index {index} out of range for a function of {n_vars} variables")]
    VariableOutOfRange { index: usize, n_vars: usize },

    #[error("{what}: {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("axis {axis} out of range for dimension {dim}")]
    InvalidAxis { axis: usize, dim: usize },

    #[error("axis {0} appears more than once in a cone")]
    RepeatedAxis(usize),

    #[error("point {0} lies in the open set")]
    PointInSet(String),

    #[error("{0} on empty input")]
    EmptyInput(&'static str),

    #[error("complex is not pure: maximal faces of dimension {low} and {high}")]
    NonPure { low: usize, high: usize },

    #[error("complex is not closed under taking faces")]
    NotClosed,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex {0} is not in the complex")]
    NoSuchVertex(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
