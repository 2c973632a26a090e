//! Deciding semi-monotonicity of voxel sets.
//!
//! Four independent checkers share the same witness format: a cone whose
//! intersection with `U` is disconnected, or a point whose octant function
//! is constant or not regular. Every recursive failure is translated back
//! to the coordinates of the input, so witnesses always replay directly
//! against the set that was checked.

mod band;
mod definition;
mod inductive;
mod octant;
mod report;

pub use band::{check_band, envelopes, Envelopes};
pub use definition::{check_definition, MAX_DEFINITION_DIM};
pub use inductive::check_inductive;
pub use octant::{check_octant, octant_function};
pub use report::{CheckReport, Method, Witness};

use std::collections::HashMap;

use crate::cubical::{frontier_complex, open_part_complex, BettiVector, GridFace};
use crate::error::Result;
use crate::voxel::{CellCoords, ConeConstraint, Half, VoxelSet};

pub fn check(u: &VoxelSet, method: Method) -> Result<CheckReport> {
    match method {
        Method::Definition => check_definition(u),
        Method::Inductive => check_inductive(u),
        Method::Band => check_band(u),
        Method::Octant => check_octant(u),
    }
}

/// Homology evidence for `U` being a regular cell: the reduced Betti
/// numbers of `U` and of its frontier.
pub fn regular_cell_evidence(u: &VoxelSet) -> Result<(BettiVector, BettiVector)> {
    let open = open_part_complex(u)?.betti_z2(true)?;
    let frontier = frontier_complex(u)?.betti_z2(true)?;
    Ok((open, frontier))
}

/// Whether the evidence is that of a regular cell of dimension `dim`:
/// `U` acyclic and the frontier a homology `(dim-1)`-sphere.
pub fn is_regular_cell_evidence(dim: usize, evidence: &(BettiVector, BettiVector)) -> bool {
    let len = dim.max(1);
    evidence.0.is_acyclic() && dim >= 1 && evidence.1 == BettiVector::sphere(dim - 1, len)
}

/// The cells of `U` grouped by their first `dim - 1` coordinates, each
/// column holding the sorted values of the last coordinate.
pub(crate) struct Columns {
    dim: usize,
    map: HashMap<CellCoords, Vec<i32>>,
}

impl Columns {
    pub(crate) fn new(u: &VoxelSet) -> Self {
        let last = u.dim() - 1;
        let mut map: HashMap<CellCoords, Vec<i32>> = HashMap::new();
        for c in u.padded_cells() {
            let mut key = *c;
            key[last] = 0;
            map.entry(key).or_default().push(c[last]);
        }
        for col in map.values_mut() {
            col.sort_unstable();
        }
        Columns { dim: u.dim(), map }
    }

    pub(crate) fn get(&self, cell: &CellCoords) -> &[i32] {
        self.map.get(cell).map_or(&[], Vec::as_slice)
    }

    /// Cell levels shared by all columns around the face `f` of the
    /// projected grid: the line through its relative interior parallel to
    /// the last axis meets `U` in exactly these cells (and the facets
    /// between consecutive ones).
    pub(crate) fn line(&self, f: &GridFace) -> Vec<i32> {
        let incident = f.incident_cells();
        let mut common = self.get(&incident[0]).to_vec();
        for g in &incident[1..] {
            let col = self.get(g);
            common.retain(|m| col.binary_search(m).is_ok());
            if common.is_empty() {
                break;
            }
        }
        common
    }

    /// Faces of the projected grid lying in the closure of the image.
    pub(crate) fn image_faces(&self) -> Vec<GridFace> {
        let mut faces: Vec<GridFace> = self
            .map
            .keys()
            .flat_map(|k| GridFace::cube(&k[..self.dim - 1]).subfaces())
            .collect();
        faces.sort_unstable();
        faces.dedup();
        faces
    }
}

pub(crate) fn runs(levels: &[i32]) -> usize {
    if levels.is_empty() {
        return 0;
    }
    1 + levels.windows(2).filter(|w| w[1] != w[0] + 1).count()
}

/// Equalities cutting out the line through the relative interior of `f`,
/// parallel to the axis after the last coordinate of `f`.
pub(crate) fn line_through(f: &GridFace) -> Vec<ConeConstraint> {
    (0..f.dim_ambient())
        .map(|j| {
            let (k, extended) = f.interval(j);
            let t = if extended {
                Half::mid(k as i64)
            } else {
                Half::int(k as i64)
            };
            ConeConstraint::eq(j, t)
        })
        .collect()
}

/// The line condition: every line parallel to the last axis meets `U` in an
/// empty set or a single interval. Returns a line cone meeting `U` in
/// several intervals.
pub(crate) fn line_violation(cols: &Columns) -> Option<Vec<ConeConstraint>> {
    cols.image_faces()
        .into_iter()
        .find(|f| runs(&cols.line(f)) >= 2)
        .map(|f| line_through(&f))
}

pub(crate) type Memo = HashMap<VoxelSet, Option<Vec<ConeConstraint>>>;

pub(crate) fn dim_cap(u: &VoxelSet, cap: usize) -> Result<()> {
    if u.dim() > cap {
        return Err(crate::error::Error::CapExceeded {
            what: "checker dimension",
            value: u.dim(),
            cap,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::voxel::shapes;

    #[test]
    fn evidence_examples() {
        let e = regular_cell_evidence(&shapes::unit_cell(2)).unwrap();
        assert_eq!((e.0.ranks.clone(), e.1.ranks.clone()), (vec![0, 0], vec![0, 1]));
        assert!(is_regular_cell_evidence(2, &e));
        let e = regular_cell_evidence(&shapes::l_tromino()).unwrap();
        assert_eq!((e.0.ranks.clone(), e.1.ranks.clone()), (vec![0, 0], vec![0, 1]));
        let e = regular_cell_evidence(&shapes::unit_cell(3)).unwrap();
        assert_eq!((e.0.ranks.clone(), e.1.ranks.clone()), (vec![0, 0, 0], vec![0, 0, 1]));
        assert!(regular_cell_evidence(&VoxelSet::empty(2)).is_err());
    }

    #[test]
    fn column_lines() {
        let u = VoxelSet::new(2, [[0, 0], [0, 2]]).unwrap();
        let cols = Columns::new(&u);
        let cone = line_violation(&cols).unwrap();
        assert_eq!(crate::voxel::format_cone(&cone), "[x1=1/2]");
        assert_eq!(u.intersect_cone(&cone).unwrap().component_count(), 2);
        assert!(line_violation(&Columns::new(&shapes::l_tromino())).is_none());
    }
}
