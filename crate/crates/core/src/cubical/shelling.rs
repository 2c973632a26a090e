//! Backtracking search for a shelling order of the top faces.

use std::collections::HashSet;

use super::ball::{is_pl_ball, pure_tops};
use super::{CubicalComplex, GridFace};
use crate::error::Result;

pub const MAX_SHELLING_TOPS: usize = 16;

/// Faces of `cell` lying in the union of the tops selected by `mask`.
fn glued_part(cell: &GridFace, tops: &[GridFace], mask: u32) -> Vec<GridFace> {
    cell.subfaces()
        .into_iter()
        .filter(|f| (0..tops.len()).any(|i| mask >> i & 1 == 1 && tops[i].contains(f)))
        .collect()
}

fn attaches(cell: &GridFace, tops: &[GridFace], mask: u32, dim_ambient: usize, k: usize) -> Result<bool> {
    let part = glued_part(cell, tops, mask);
    if part.is_empty() {
        return Ok(false);
    }
    let c = CubicalComplex::from_faces(dim_ambient, part)?;
    if c.maximal_faces().iter().any(|f| f.dim() + 1 != k) {
        return Ok(false);
    }
    is_pl_ball(&c)
}

/// An ordering of the top faces in which each face meets the union of its
/// predecessors in a ball of one dimension less, or `None` when no such
/// ordering exists.
///
/// Requires a pure complex with at most 16 top faces.
pub fn find_shelling(complex: &CubicalComplex) -> Result<Option<Vec<GridFace>>> {
    let p = pure_tops(complex, MAX_SHELLING_TOPS)?;
    let n = p.tops.len();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut dead: HashSet<u32> = HashSet::new();
    let mut order = Vec::with_capacity(n);
    for first in 0..n {
        order.clear();
        order.push(first);
        if extend(
            &p.tops,
            p.k,
            complex.dim_ambient(),
            1 << first,
            full,
            &mut order,
            &mut dead,
        )? {
            return Ok(Some(order.iter().map(|&i| p.tops[i]).collect()));
        }
    }
    Ok(None)
}

fn extend(
    tops: &[GridFace],
    k: usize,
    dim_ambient: usize,
    mask: u32,
    full: u32,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u32>,
) -> Result<bool> {
    if mask == full {
        return Ok(true);
    }
    if dead.contains(&mask) {
        return Ok(false);
    }
    for next in 0..tops.len() {
        if mask >> next & 1 == 1 || !attaches(&tops[next], tops, mask, dim_ambient, k)? {
            continue;
        }
        order.push(next);
        if extend(tops, k, dim_ambient, mask | 1 << next, full, order, dead)? {
            return Ok(true);
        }
        order.pop();
    }
    dead.insert(mask);
    Ok(false)
}
