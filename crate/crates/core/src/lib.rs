//! Semi-monotone sets, regular Boolean functions and the small complexes
//! used to verify statements about them.

pub mod boolean;
pub mod cli;
pub mod cubical;
pub mod error;
pub mod generate;
pub mod gf2;
pub mod semimonotone;
pub mod simplicial;
pub mod vdd;
pub mod verify;
pub mod voxel;

pub use boolean::{BooleanFunction, Quantifier, QuantifierWord};
pub use cubical::{BettiVector, CubicalComplex, GridFace};
pub use error::{Error, Result};
pub use semimonotone::{CheckReport, Method, Witness};
pub use simplicial::SimplicialComplex;
pub use voxel::{ConeConstraint, Half, Relation, VoxelSet};
