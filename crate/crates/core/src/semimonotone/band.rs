//! The band criterion: `U` is the region between a lower envelope `f` and
//! an upper envelope `g` over its projection `U'`, and is semi-monotone iff
//! `U'` is, every strict sublevel set of `f` is, and every strict
//! superlevel set of `g` is.

use crate::error::{Error, Result};
use crate::voxel::{half_grid_values, ConeConstraint, Half, VoxelSet, MAX_DIM};

use super::report::{CheckReport, Method, Witness};
use super::{dim_cap, line_violation, Columns, Memo};

/// Envelopes of `U` over the cells of its projection along the last axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelopes {
    pub base: VoxelSet,
    /// `(cell of base, f, g)` with `f < g`, both integers.
    pub values: Vec<(Vec<i32>, i32, i32)>,
}

impl Envelopes {
    /// Cells of `base` where `f < r`.
    pub fn sublevel(&self, r: Half) -> VoxelSet {
        self.select(|f, _| (f as i64) * 2 < r.twice())
    }

    /// Cells of `base` where `g > r`.
    pub fn superlevel(&self, r: Half) -> VoxelSet {
        self.select(|_, g| (g as i64) * 2 > r.twice())
    }

    fn select(&self, keep: impl Fn(i32, i32) -> bool) -> VoxelSet {
        let cells = self
            .values
            .iter()
            .filter(|(_, f, g)| keep(*f, *g))
            .map(|(c, _, _)| c.clone());
        VoxelSet::new(self.base.dim(), cells).expect("cells of the base")
    }
}

/// Lower and upper envelopes of `U` along its last axis. Requires every
/// column to be a single run and the image cells to be the true
/// projection; reports either failure as a disconnecting cone.
pub fn envelopes(u: &VoxelSet) -> Result<std::result::Result<Envelopes, Vec<ConeConstraint>>> {
    if u.dim() == 0 {
        return Err(Error::InvalidArgument("envelopes need at least one axis".into()));
    }
    let cols = Columns::new(u);
    if let Some(line) = line_violation(&cols) {
        return Ok(Err(line));
    }
    let base = match u.project_exact(u.dim() - 1)? {
        Ok(base) => base,
        Err(gap) => return Ok(Err(gap.line_cone())),
    };
    let values = base
        .cells()
        .map(|c| {
            let mut key = [0; MAX_DIM];
            key[..c.len()].copy_from_slice(c);
            let col = cols.get(&key);
            (c.to_vec(), col[0], col[col.len() - 1] + 1)
        })
        .collect();
    Ok(Ok(Envelopes { base, values }))
}

pub fn check_band(u: &VoxelSet) -> Result<CheckReport> {
    dim_cap(u, MAX_DIM)?;
    let mut memo = Memo::new();
    Ok(match find(u, &mut memo)? {
        None => CheckReport::pass(Method::Band),
        Some(cone) => CheckReport::fail(Method::Band, Witness::cone(u, cone)?),
    })
}

fn find(u: &VoxelSet, memo: &mut Memo) -> Result<Option<Vec<ConeConstraint>>> {
    if u.dim() == 0 || u.len() <= 1 {
        return Ok(None);
    }
    if let Some(hit) = memo.get(u) {
        return Ok(hit.clone());
    }
    let found = search(u, memo)?;
    memo.insert(u.clone(), found.clone());
    Ok(found)
}

fn search(u: &VoxelSet, memo: &mut Memo) -> Result<Option<Vec<ConeConstraint>>> {
    let env = match envelopes(u)? {
        Ok(env) => env,
        Err(cone) => return Ok(Some(cone)),
    };
    debug_assert!(env.values.iter().all(|(_, f, g)| f < g));
    if let Some(cone) = find(&env.base, memo)? {
        return Ok(Some(cone));
    }
    let last = u.dim() - 1;
    let bb = u.bounding_box().expect("non-empty");
    for r in half_grid_values(bb[last].0, bb[last].1) {
        // {f < r} is the projection of U ∩ {x_last < r}, and dually for g
        let pieces = [
            (env.sublevel(r), ConeConstraint::lt(last, r)),
            (env.superlevel(r), ConeConstraint::gt(last, r)),
        ];
        for (level, c) in pieces {
            if let Some(mut cone) = find(&level, memo)? {
                cone.push(c);
                return Ok(Some(cone));
            }
        }
    }
    Ok(None)
}
