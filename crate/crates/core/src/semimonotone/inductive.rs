//! The inductive criterion: lines parallel to the last axis meet `U` in
//! intervals, and the projections of `U` cut by half-spaces and
//! hyperplanes orthogonal to that axis are semi-monotone.

use crate::error::Result;
use crate::voxel::{half_grid_values, ConeConstraint, Relation, VoxelSet, MAX_DIM};

use super::report::{CheckReport, Method, Witness};
use super::{dim_cap, line_violation, Columns, Memo};

pub fn check_inductive(u: &VoxelSet) -> Result<CheckReport> {
    dim_cap(u, MAX_DIM)?;
    let mut memo = Memo::new();
    Ok(match find(u, &mut memo) {
        None => CheckReport::pass(Method::Inductive),
        Some(cone) => CheckReport::fail(Method::Inductive, Witness::cone(u, cone)?),
    })
}

/// A disconnecting cone for `u`, in the coordinates of `u`.
fn find(u: &VoxelSet, memo: &mut Memo) -> Option<Vec<ConeConstraint>> {
    if u.dim() == 0 || u.len() <= 1 {
        return None;
    }
    if let Some(hit) = memo.get(u) {
        return hit.clone();
    }
    let found = search(u, memo);
    memo.insert(u.clone(), found.clone());
    found
}

fn search(u: &VoxelSet, memo: &mut Memo) -> Option<Vec<ConeConstraint>> {
    let cols = Columns::new(u);
    if let Some(line) = line_violation(&cols) {
        return Some(line);
    }
    let last = u.dim() - 1;
    let bb = u.bounding_box().expect("non-empty");
    for t in half_grid_values(bb[last].0, bb[last].1) {
        for rel in [Relation::Lt, Relation::Gt] {
            let c = ConeConstraint::new(last, rel, t);
            let part = u.apply(c);
            if part.is_empty() {
                continue;
            }
            let shadow = match part.project_exact(last).expect("valid axis") {
                Ok(shadow) => shadow,
                Err(gap) => {
                    let mut cone = gap.line_cone();
                    cone.push(c);
                    return Some(cone);
                }
            };
            if let Some(mut cone) = find(&shadow, memo) {
                cone.push(c);
                return Some(cone);
            }
        }
        let c = ConeConstraint::eq(last, t);
        if let Some(mut cone) = find(&u.apply(c), memo) {
            cone.push(c);
            return Some(cone);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::voxel::{format_cone, shapes};

    #[test]
    fn inductive_examples() {
        let broken = VoxelSet::new(2, [[0, 0], [0, 2]]).unwrap();
        let r = check_inductive(&broken).unwrap();
        let Some(Witness::Cone { cone, .. }) = &r.witness else {
            panic!("expected a line witness");
        };
        assert_eq!(format_cone(cone), "[x1=1/2]");
        assert!(check_inductive(&shapes::l_tromino()).unwrap().verdict);
        assert!(
            check_inductive(&VoxelSet::new(1, [[0], [1], [2]]).unwrap())
                .unwrap()
                .verdict
        );
        assert!(!check_inductive(&VoxelSet::new(1, [[0], [2]]).unwrap()).unwrap().verdict);
    }

    #[test]
    fn failures_replay() {
        for u in [shapes::u_pentomino(), shapes::diagonal_pair()] {
            let r = check_inductive(&u).unwrap();
            assert!(!r.verdict);
            assert!(r.witness.unwrap().replay(&u).unwrap(), "{u:?}");
        }
    }
}
