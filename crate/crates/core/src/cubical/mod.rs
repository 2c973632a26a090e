//! Axis-aligned cubical complexes on the integer grid with Z/2 homology.

mod ball;
mod shelling;

pub use ball::{is_pl_ball, pinch_faces, MAX_BALL_DIM, MAX_BALL_TOPS};
pub use shelling::{find_shelling, MAX_SHELLING_TOPS};

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::gf2::BitMatrix;
use crate::voxel::{CellCoords, VoxelSet, MAX_DIM};

/// A face of the unit grid: per coordinate either a point `k` or a unit
/// interval `[k, k+1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridFace {
    dim_ambient: u8,
    extent: u8,
    lo: CellCoords,
}

impl GridFace {
    /// `extent` has bit `j` set when coordinate `j` is a unit interval.
    pub fn new(lo: &[i32], extent: u8) -> Self {
        assert!(lo.len() <= MAX_DIM);
        assert!(lo.len() == MAX_DIM || extent >> lo.len() == 0);
        let mut c = [0; MAX_DIM];
        c[..lo.len()].copy_from_slice(lo);
        GridFace {
            dim_ambient: lo.len() as u8,
            extent,
            lo: c,
        }
    }

    /// The closed unit cube with lower corner `lo`.
    pub fn cube(lo: &[i32]) -> Self {
        Self::new(lo, ((1u16 << lo.len()) - 1) as u8)
    }

    pub fn vertex(coords: &[i32]) -> Self {
        Self::new(coords, 0)
    }

    pub fn dim(&self) -> usize {
        self.extent.count_ones() as usize
    }

    pub fn dim_ambient(&self) -> usize {
        self.dim_ambient as usize
    }

    pub fn extent(&self) -> u8 {
        self.extent
    }

    /// `(k, extended)`: the point `k`, or `[k, k+1]` when `extended`.
    pub fn interval(&self, j: usize) -> (i32, bool) {
        (self.lo[j], self.extent >> j & 1 == 1)
    }

    pub fn lower_corner(&self) -> &[i32] {
        &self.lo[..self.dim_ambient()]
    }

    /// The `2·dim` codimension-one faces.
    pub fn facets(&self) -> impl Iterator<Item = GridFace> + '_ {
        (0..self.dim_ambient())
            .filter(|&j| self.extent >> j & 1 == 1)
            .flat_map(move |j| {
                [0, 1].map(|d| {
                    let mut f = *self;
                    f.extent &= !(1 << j);
                    f.lo[j] += d;
                    f
                })
            })
    }

    /// Every face of this face, itself included.
    pub fn subfaces(&self) -> Vec<GridFace> {
        let mut out = vec![*self];
        for j in 0..self.dim_ambient() {
            if self.extent >> j & 1 == 0 {
                continue;
            }
            let mut next = Vec::with_capacity(out.len() * 3);
            for f in out {
                next.push(f);
                for d in [0, 1] {
                    let mut g = f;
                    g.extent &= !(1 << j);
                    g.lo[j] += d;
                    next.push(g);
                }
            }
            out = next;
        }
        out
    }

    /// Whether `other` is a face of `self`.
    pub fn contains(&self, other: &GridFace) -> bool {
        (0..self.dim_ambient()).all(|j| {
            let (a, ea) = self.interval(j);
            let (b, eb) = other.interval(j);
            match (ea, eb) {
                (true, true) => a == b,
                (true, false) => b == a || b == a + 1,
                (false, true) => false,
                (false, false) => a == b,
            }
        })
    }

    pub fn intersection(&self, other: &GridFace) -> Option<GridFace> {
        let mut out = *self;
        for j in 0..self.dim_ambient() {
            let (a, ea) = self.interval(j);
            let (b, eb) = other.interval(j);
            let (lo, ext) = match (ea, eb) {
                (true, true) if a == b => (a, true),
                (true, true) if a + 1 == b => (b, false),
                (true, true) if b + 1 == a => (a, false),
                (true, false) if b == a || b == a + 1 => (b, false),
                (false, true) if a == b || a == b + 1 => (a, false),
                (false, false) if a == b => (a, false),
                _ => return None,
            };
            out.lo[j] = lo;
            if ext {
                out.extent |= 1 << j;
            } else {
                out.extent &= !(1 << j);
            }
        }
        Some(out)
    }

    /// The `2^(n - dim)` top cells whose closures contain this face.
    pub fn incident_cells(&self) -> Vec<CellCoords> {
        let mut out = vec![self.lo];
        for j in 0..self.dim_ambient() {
            if self.extent >> j & 1 == 1 {
                continue;
            }
            out = out
                .into_iter()
                .flat_map(|c| {
                    let mut below = c;
                    below[j] -= 1;
                    [below, c]
                })
                .collect();
        }
        out
    }
}

impl fmt::Debug for GridFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GridFace({self})")
    }
}

/// `k` for a point coordinate and `k:k+1` for an interval, space separated.
impl fmt::Display for GridFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.dim_ambient() {
            if j > 0 {
                f.write_str(" ")?;
            }
            match self.interval(j) {
                (k, true) => write!(f, "{}:{}", k, k + 1)?,
                (k, false) => write!(f, "{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for GridFace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a grid face: {s:?}"));
        let mut lo = Vec::new();
        let mut extent = 0u8;
        for (j, tok) in s.split_whitespace().enumerate() {
            if j >= MAX_DIM {
                return Err(bad());
            }
            match tok.split_once(':') {
                Some((a, b)) => {
                    let a: i32 = a.parse().map_err(|_| bad())?;
                    let b: i32 = b.parse().map_err(|_| bad())?;
                    if b != a + 1 {
                        return Err(bad());
                    }
                    lo.push(a);
                    extent |= 1 << j;
                }
                None => lo.push(tok.parse().map_err(|_| bad())?),
            }
        }
        Ok(GridFace::new(&lo, extent))
    }
}

/// A finite set of grid faces closed under taking faces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicalComplex {
    dim_ambient: usize,
    faces: BTreeSet<GridFace>,
}

/// Z/2 Betti numbers in degrees `0..max(dim_ambient, 1)`.
///
/// A subcomplex of the grid in `R^n` has vanishing homology in degree `n`
/// and above, so those degrees are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector {
    pub reduced: bool,
    pub ranks: Vec<usize>,
}

impl BettiVector {
    pub fn is_acyclic(&self) -> bool {
        self.reduced && self.ranks.iter().all(|&r| r == 0)
    }

    /// Reduced ranks of the `k`-sphere, padded to `len` degrees.
    pub fn sphere(k: usize, len: usize) -> Self {
        let mut ranks = vec![0; len];
        ranks[k] = 1;
        BettiVector { reduced: true, ranks }
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranks.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Ranks of the Z/2 homology of a complex given its faces grouped by
/// dimension; `boundary(k, i)` lists the indices of the facets of the
/// `i`-th `k`-face in the `(k-1)`-faces.
pub(crate) fn z2_betti_from_boundaries(
    counts: &[usize],
    mut boundary: impl FnMut(usize, usize) -> Vec<usize>,
) -> Vec<usize> {
    let top = counts.len();
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        let mut m = BitMatrix::new(counts[k - 1]);
        for i in 0..counts[k] {
            m.push_row(boundary(k, i));
        }
        ranks[k] = m.rank();
    }
    (0..top).map(|k| counts[k] - ranks[k] - ranks[k + 1]).collect()
}

impl CubicalComplex {
    pub fn new(dim_ambient: usize) -> Self {
        CubicalComplex {
            dim_ambient,
            faces: BTreeSet::new(),
        }
    }

    /// The downward closure of the given faces.
    pub fn from_top_faces<I: IntoIterator<Item = GridFace>>(dim_ambient: usize, tops: I) -> Result<Self> {
        let mut c = Self::new(dim_ambient);
        for f in tops {
            c.insert_closed(f)?;
        }
        Ok(c)
    }

    /// A complex from an explicit face list, which must already be closed.
    pub fn from_faces<I: IntoIterator<Item = GridFace>>(dim_ambient: usize, faces: I) -> Result<Self> {
        let mut c = Self::new(dim_ambient);
        for f in faces {
            if f.dim_ambient() != dim_ambient {
                return Err(Error::DimensionMismatch {
                    expected: dim_ambient,
                    found: f.dim_ambient(),
                });
            }
            c.faces.insert(f);
        }
        if c.faces.iter().any(|f| f.facets().any(|g| !c.faces.contains(&g))) {
            return Err(Error::NotClosed);
        }
        Ok(c)
    }

    pub fn insert_closed(&mut self, face: GridFace) -> Result<()> {
        if face.dim_ambient() != self.dim_ambient {
            return Err(Error::DimensionMismatch {
                expected: self.dim_ambient,
                found: face.dim_ambient(),
            });
        }
        if self.faces.contains(&face) {
            return Ok(());
        }
        self.faces.extend(face.subfaces());
        Ok(())
    }

    pub fn dim_ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, f: &GridFace) -> bool {
        self.faces.contains(f)
    }

    pub fn faces(&self) -> impl Iterator<Item = &GridFace> + '_ {
        self.faces.iter()
    }

    /// Largest face dimension, `None` when empty.
    pub fn max_dim(&self) -> Option<usize> {
        self.faces.iter().map(GridFace::dim).max()
    }

    /// Number of faces of each dimension `0..=max_dim`.
    pub fn count_by_dim(&self) -> Vec<usize> {
        let Some(top) = self.max_dim() else {
            return Vec::new();
        };
        let mut counts = vec![0; top + 1];
        for f in &self.faces {
            counts[f.dim()] += 1;
        }
        counts
    }

    /// Faces not contained in any other face.
    pub fn maximal_faces(&self) -> Vec<GridFace> {
        let mut covered = BTreeSet::new();
        for f in &self.faces {
            covered.extend(f.facets());
        }
        self.faces.iter().filter(|f| !covered.contains(f)).copied().collect()
    }

    pub fn union(&self, other: &CubicalComplex) -> Result<CubicalComplex> {
        if other.dim_ambient != self.dim_ambient {
            return Err(Error::DimensionMismatch {
                expected: self.dim_ambient,
                found: other.dim_ambient,
            });
        }
        let mut c = self.clone();
        c.faces.extend(other.faces.iter().copied());
        Ok(c)
    }

    /// Non-reduced Z/2 Betti numbers in degrees `0..=max_dim`.
    pub(crate) fn z2_ranks(&self) -> Vec<usize> {
        let Some(top) = self.max_dim() else {
            return Vec::new();
        };
        let mut by_dim: Vec<Vec<GridFace>> = vec![Vec::new(); top + 1];
        for f in &self.faces {
            by_dim[f.dim()].push(*f);
        }
        let index: Vec<HashMap<GridFace, usize>> = by_dim
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
            .collect();
        let counts: Vec<usize> = by_dim.iter().map(Vec::len).collect();
        z2_betti_from_boundaries(&counts, |k, i| {
            by_dim[k][i].facets().map(|g| index[k - 1][&g]).collect()
        })
    }

    /// Z/2 homology ranks; `reduced` subtracts one from degree 0.
    pub fn betti_z2(&self, reduced: bool) -> Result<BettiVector> {
        if reduced && self.is_empty() {
            return Err(Error::EmptyInput("reduced homology"));
        }
        let mut ranks = self.z2_ranks();
        if reduced {
            ranks[0] -= 1;
        }
        let len = self.dim_ambient.max(1);
        if ranks.len() > len {
            debug_assert!(ranks[len..].iter().all(|&r| r == 0));
            ranks.truncate(len);
        }
        ranks.resize(len, 0);
        Ok(BettiVector { reduced, ranks })
    }

    /// Number of connected components of the union of the faces.
    pub fn connected_components(&self) -> usize {
        let index: HashMap<GridFace, usize> = self.faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut dsu = DisjointSets::new(self.faces.len());
        for (i, f) in self.faces.iter().enumerate() {
            for g in f.facets() {
                if let Some(&j) = index.get(&g) {
                    dsu.union(i, j);
                }
            }
        }
        dsu.count()
    }

    /// Parses one face per line in the `k` / `k:k+1` format; the result is
    /// closed downward.
    pub fn parse_faces(text: &str) -> Result<CubicalComplex> {
        let mut faces = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            faces.push(line.parse::<GridFace>().map_err(|e| parse_err(i + 1, e.to_string()))?);
        }
        let dim = faces.first().map_or(0, GridFace::dim_ambient);
        Self::from_top_faces(dim, faces)
    }
}

impl fmt::Debug for CubicalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicalComplex(dim {}, {:?})", self.dim_ambient, self.count_by_dim())
    }
}

impl fmt::Display for CubicalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut faces: Vec<&GridFace> = self.faces.iter().collect();
        faces.sort_by_key(|g| (g.dim(), **g));
        for g in faces {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// All selected closed cells with their faces.
pub fn closure_complex(voxels: &VoxelSet) -> Result<CubicalComplex> {
    if voxels.is_empty() {
        return Err(Error::EmptyInput("closure complex"));
    }
    CubicalComplex::from_top_faces(voxels.dim(), voxels.cells().map(GridFace::cube))
}

/// Faces of the closure whose relative interiors are not in `U`, i.e. some
/// incident cell is unselected. The result is automatically closed.
pub fn frontier_complex(voxels: &VoxelSet) -> Result<CubicalComplex> {
    let closure = closure_complex(voxels)?;
    let faces = closure
        .faces()
        .filter(|f| f.incident_cells().iter().any(|c| !voxels.contains_padded(c)))
        .copied();
    CubicalComplex::from_faces(voxels.dim(), faces)
}

/// A complex homotopy equivalent to `U`: one cube per face of the grid
/// lying in `U`, spanned by the centers of the cells around that face.
/// Cell `a` becomes the vertex `a`, so the result is the full cubical
/// subcomplex of the cell-index lattice on the selected cells.
pub fn open_part_complex(voxels: &VoxelSet) -> Result<CubicalComplex> {
    if voxels.is_empty() {
        return Err(Error::EmptyInput("open part"));
    }
    let n = voxels.dim();
    let duals = voxels.open_faces().into_iter().map(|f| {
        let mut lo = [0i32; MAX_DIM];
        let mut extent = 0u8;
        for (j, slot) in lo.iter_mut().enumerate().take(n) {
            let (k, ext) = f.interval(j);
            if ext {
                *slot = k;
            } else {
                *slot = k - 1;
                extent |= 1 << j;
            }
        }
        GridFace::new(&lo[..n], extent)
    });
    CubicalComplex::from_faces(n, duals)
}
