//! Semi-monotonicity straight from the definition: every cone cuts `U` in
//! a connected set.

use std::collections::{HashSet, VecDeque};

use crate::error::Result;
use crate::voxel::{half_grid_values, ConeConstraint, Relation, VoxelSet};

use super::dim_cap;
use super::report::{CheckReport, Method, Witness};

pub const MAX_DEFINITION_DIM: usize = 4;

// Greater-than before equality so that single-constraint witnesses come
// out as half-spaces when both exist.
const ORDER: [Relation; 3] = [Relation::Lt, Relation::Gt, Relation::Eq];

/// Enumerates every cone with half-grid thresholds in the widened bounding
/// box, fewest constraints first.
///
/// Constraints are applied in decreasing axis order, so an equality only
/// renumbers axes that are already fixed and the remaining free axes keep
/// their original indices. Cones producing the same intermediate set with
/// the same free axes are explored once.
pub fn check_definition(u: &VoxelSet) -> Result<CheckReport> {
    dim_cap(u, MAX_DEFINITION_DIM)?;
    let Some(bb) = u.bounding_box() else {
        return Ok(CheckReport::pass(Method::Definition));
    };
    if !u.is_connected() {
        return Ok(CheckReport::fail(Method::Definition, Witness::cone(u, Vec::new())?));
    }
    let thresholds: Vec<_> = bb.iter().map(|&(lo, hi)| half_grid_values(lo, hi)).collect();
    let mut seen: HashSet<(VoxelSet, usize)> = HashSet::new();
    let mut queue: VecDeque<(VoxelSet, usize, Vec<ConeConstraint>)> = VecDeque::new();
    queue.push_back((u.clone(), u.dim(), Vec::new()));
    while let Some((set, free, cone)) = queue.pop_front() {
        for axis in (0..free).rev() {
            for rel in ORDER {
                for &t in &thresholds[axis] {
                    let c = ConeConstraint::new(axis, rel, t);
                    let next = set.apply(c);
                    if !next.is_connected() {
                        let mut witness = cone.clone();
                        witness.push(c);
                        return Ok(CheckReport::fail(Method::Definition, Witness::cone(u, witness)?));
                    }
                    if axis == 0 || next.len() <= 1 {
                        continue;
                    }
                    if seen.insert((next.clone(), axis)) {
                        let mut extended = cone.clone();
                        extended.push(c);
                        queue.push_back((next, axis, extended));
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass(Method::Definition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::voxel::{format_cone, shapes};

    #[test]
    fn definition_examples() {
        assert!(check_definition(&shapes::l_tromino()).unwrap().verdict);
        assert!(check_definition(&shapes::staircase()).unwrap().verdict);
        let u = shapes::u_pentomino();
        let r = check_definition(&u).unwrap();
        let Some(Witness::Cone { cone, components }) = &r.witness else {
            panic!("expected a cone witness");
        };
        assert_eq!((format_cone(cone).as_str(), *components), ("[x2>1]", 2));
        let r = check_definition(&shapes::diagonal_pair()).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness::Cone {
                cone: vec![],
                components: 2
            })
        );
        assert!(check_definition(&VoxelSet::empty(3)).unwrap().verdict);
    }

    #[test]
    fn cap() {
        assert!(check_definition(&shapes::unit_cell(5)).is_err());
    }
}
