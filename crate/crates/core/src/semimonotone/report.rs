use std::fmt;
use std::str::FromStr;

use crate::boolean::{is_regular, BooleanFunction};
use crate::error::{Error, Result};
use crate::voxel::{format_cone, parse_cone, ConeConstraint, Half, VoxelSet};

use super::octant::octant_function;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Definition,
    Inductive,
    Band,
    Octant,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Definition, Method::Inductive, Method::Band, Method::Octant];

    pub fn name(self) -> &'static str {
        match self {
            Method::Definition => "definition",
            Method::Inductive => "inductive",
            Method::Band => "band",
            Method::Octant => "octant",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

/// Evidence that a set is not semi-monotone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A cone, in the coordinates of the checked set, whose intersection
    /// with `U` has `components` connected components.
    Cone {
        cone: Vec<ConeConstraint>,
        components: usize,
    },
    /// A point outside `U` whose octant function is constant or not
    /// regular.
    Octant {
        point: Vec<Half>,
        function: BooleanFunction,
    },
}

impl Witness {
    pub(crate) fn cone(u: &VoxelSet, mut cone: Vec<ConeConstraint>) -> Result<Witness> {
        cone.sort_by_key(|c| c.axis);
        let components = u.intersect_cone(&cone)?.component_count();
        debug_assert!(components >= 2, "cone {} does not disconnect", format_cone(&cone));
        Ok(Witness::Cone { cone, components })
    }

    /// Re-evaluates the witness against `u`; true when it reproduces the
    /// recorded failure exactly.
    pub fn replay(&self, u: &VoxelSet) -> Result<bool> {
        match self {
            Witness::Cone { cone, components } => {
                let got = u.intersect_cone(cone)?.component_count();
                Ok(got >= 2 && got == *components)
            }
            Witness::Octant { point, function } => {
                if point.len() != u.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: u.dim(),
                        found: point.len(),
                    });
                }
                if u.contains_point(point) {
                    return Ok(false);
                }
                let psi = octant_function(u, point)?;
                Ok(psi == *function && (psi.is_constant() || !is_regular(&psi)))
            }
        }
    }
}

fn table_bits(psi: &BooleanFunction) -> String {
    (0..psi.table_len())
        .map(|i| if psi.value(i) { '1' } else { '0' })
        .collect()
}

/// `cone [x2>1] components=2` or `point (3/2,3/2) function=1111`.
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Cone { cone, components } => {
                write!(f, "cone {} components={components}", format_cone(cone))
            }
            Witness::Octant { point, function } => {
                let coords: Vec<String> = point.iter().map(Half::to_string).collect();
                write!(f, "point ({}) function={}", coords.join(","), table_bits(function))
            }
        }
    }
}

impl FromStr for Witness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a witness: {s:?}"));
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("cone ") {
            let (cone, count) = rest.rsplit_once(" components=").ok_or_else(bad)?;
            return Ok(Witness::Cone {
                cone: parse_cone(cone.trim())?,
                components: count.trim().parse().map_err(|_| bad())?,
            });
        }
        if let Some(rest) = s.strip_prefix("point ") {
            let (point, bits) = rest.rsplit_once(" function=").ok_or_else(bad)?;
            let inner = point
                .trim()
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(bad)?;
            let point: Vec<Half> = inner
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect::<Result<_>>()?;
            let text = format!("vars {}\n{}", point.len(), bits.trim());
            return Ok(Witness::Octant {
                point,
                function: text.parse()?,
            });
        }
        Err(bad())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub(crate) fn pass(method: Method) -> Self {
        CheckReport {
            verdict: true,
            method,
            witness: None,
        }
    }

    pub(crate) fn fail(method: Method, witness: Witness) -> Self {
        CheckReport {
            verdict: false,
            method,
            witness: Some(witness),
        }
    }
}

/// Key-value lines `verdict=`, `method=`, `witness=`.
impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict={}", self.verdict)?;
        writeln!(f, "method={}", self.method)?;
        match &self.witness {
            Some(w) => writeln!(f, "witness={w}"),
            None => writeln!(f, "witness=none"),
        }
    }
}

impl FromStr for CheckReport {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut verdict, mut method, mut witness) = (None, None, None);
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("expected key=value: {line:?}")))?;
            match key {
                "verdict" => {
                    verdict = Some(
                        value
                            .parse::<bool>()
                            .map_err(|e| Error::InvalidArgument(e.to_string()))?,
                    )
                }
                "method" => method = Some(value.parse::<Method>()?),
                "witness" if value == "none" => witness = Some(None),
                "witness" => witness = Some(Some(value.parse::<Witness>()?)),
                _ => {}
            }
        }
        let missing = |k: &str| Error::InvalidArgument(format!("report lacks `{k}`"));
        Ok(CheckReport {
            verdict: verdict.ok_or_else(|| missing("verdict"))?,
            method: method.ok_or_else(|| missing("method"))?,
            witness: witness.ok_or_else(|| missing("witness"))?,
        })
    }
}
