//! Octant functions and the octant criterion.

use crate::boolean::{is_regular, BooleanFunction};
use crate::error::{Error, Result};
use crate::voxel::{half_grid_values, Half, VoxelSet};

use super::report::{CheckReport, Method, Witness};

/// Cell counts over boxes of lower corners via an n-dimensional prefix sum.
pub(crate) struct Occupancy {
    lo: Vec<i64>,
    hi: Vec<i64>,
    strides: Vec<usize>,
    sums: Vec<u32>,
}

impl Occupancy {
    pub(crate) fn new(u: &VoxelSet) -> Self {
        let n = u.dim();
        let bb = u.bounding_box().unwrap_or_else(|| vec![(0, -1); n]);
        let lo: Vec<i64> = bb.iter().map(|b| b.0 as i64).collect();
        let hi: Vec<i64> = bb.iter().map(|b| b.1 as i64).collect();
        let mut strides = vec![1usize; n];
        let mut size = 1usize;
        for j in 0..n {
            strides[j] = size;
            size *= (hi[j] - lo[j] + 2).max(1) as usize;
        }
        let mut sums = vec![0u32; size];
        for c in u.cells() {
            let idx: usize = (0..n).map(|j| (c[j] as i64 - lo[j] + 1) as usize * strides[j]).sum();
            sums[idx] += 1;
        }
        for j in 0..n {
            let width = (hi[j] - lo[j] + 2) as usize;
            for idx in 0..size {
                if !(idx / strides[j]).is_multiple_of(width) {
                    sums[idx] += sums[idx - strides[j]];
                }
            }
        }
        Occupancy { lo, hi, strides, sums }
    }

    /// Whether any cell has lower corner in the inclusive box `from..=to`.
    pub(crate) fn any(&self, from: &[i64], to: &[i64]) -> bool {
        let n = self.lo.len();
        let mut a = vec![0usize; n];
        let mut b = vec![0usize; n];
        for j in 0..n {
            let f = from[j].max(self.lo[j]);
            let t = to[j].min(self.hi[j]);
            if f > t {
                return false;
            }
            a[j] = (f - self.lo[j]) as usize;
            b[j] = (t - self.lo[j] + 1) as usize;
        }
        let mut total = 0i64;
        for corner in 0..1usize << n {
            let mut idx = 0;
            let mut lower = 0;
            for j in 0..n {
                if corner >> j & 1 == 1 {
                    idx += a[j] * self.strides[j];
                    lower += 1;
                } else {
                    idx += b[j] * self.strides[j];
                }
            }
            let v = self.sums[idx] as i64;
            total += if lower % 2 == 0 { v } else { -v };
        }
        total > 0
    }
}

fn octant_function_with(occ: &Occupancy, p: &[Half]) -> BooleanFunction {
    let n = p.len();
    let mut from = vec![0i64; n];
    let mut to = vec![0i64; n];
    BooleanFunction::from_fn(n, |xi| {
        for j in 0..n {
            if xi >> j & 1 == 1 {
                // the cell reaches past p_j
                from[j] = p[j].floor();
                to[j] = i64::MAX;
            } else {
                from[j] = i64::MIN;
                to[j] = p[j].ceil() - 1;
            }
        }
        occ.any(&from, &to)
    })
    .expect("dimension is within the variable cap")
}

fn format_point(p: &[Half]) -> String {
    let coords: Vec<String> = p.iter().map(Half::to_string).collect();
    format!("({})", coords.join(","))
}

/// The function at `p` for `U`: bit `ξ` is set when the open octant at `p`
/// with `x_j > p_j` exactly for `ξ_j = 1` meets `U`.
pub fn octant_function(u: &VoxelSet, p: &[Half]) -> Result<BooleanFunction> {
    if p.len() != u.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: p.len(),
        });
    }
    if u.contains_point(p) {
        return Err(Error::PointInSet(format_point(p)));
    }
    Ok(octant_function_with(&Occupancy::new(u), p))
}

/// Semi-monotonicity via octant functions: every half-grid point of the
/// widened bounding box outside `U` must carry a non-constant regular
/// function.
pub fn check_octant(u: &VoxelSet) -> Result<CheckReport> {
    let Some(bb) = u.bounding_box() else {
        return Ok(CheckReport::pass(Method::Octant));
    };
    if u.dim() == 0 {
        return Ok(CheckReport::pass(Method::Octant));
    }
    let occ = Occupancy::new(u);
    let axes: Vec<Vec<Half>> = bb.iter().map(|&(lo, hi)| half_grid_values(lo, hi)).collect();
    let mut idx = vec![0usize; axes.len()];
    let mut p: Vec<Half> = axes.iter().map(|a| a[0]).collect();
    loop {
        if !u.contains_point(&p) {
            let psi = octant_function_with(&occ, &p);
            if psi.is_constant() || !is_regular(&psi) {
                return Ok(CheckReport::fail(
                    Method::Octant,
                    Witness::Octant {
                        point: p,
                        function: psi,
                    },
                ));
            }
        }
        // odometer, last axis fastest
        let mut j = axes.len();
        loop {
            if j == 0 {
                return Ok(CheckReport::pass(Method::Octant));
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < axes[j].len() {
                p[j] = axes[j][idx[j]];
                break;
            }
            idx[j] = 0;
            p[j] = axes[j][0];
        }
    }
}
