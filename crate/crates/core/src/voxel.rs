//! Bounded open sets modeled as interiors of unions of closed unit cells.
//!
//! A cell is named by its lower corner `a ∈ Z^n` and occupies `∏ [a_j, a_j+1]`.
//! A point `x` lies in the modeled open set `U` iff every cell incident to
//! `x` is selected. Coordinate cones are taken with thresholds on the
//! half-integer grid; see `docs/half_grid.md` for why that sample is exact.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::cubical::GridFace;
use crate::error::{parse_err, Error, Result};

pub const MAX_DIM: usize = 6;

/// Lower corner of a cell, padded with zeros past the set's dimension.
pub type CellCoords = [i32; MAX_DIM];

/// A value of `(1/2)·Z`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Half(i64);

impl Half {
    pub const fn from_twice(twice: i64) -> Self {
        Half(twice)
    }

    pub const fn int(k: i64) -> Self {
        Half(2 * k)
    }

    /// `k + 1/2`.
    pub const fn mid(k: i64) -> Self {
        Half(2 * k + 1)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn ceil(self) -> i64 {
        -(-self.0).div_euclid(2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Half {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("not a half-integer: {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "1" => Ok(Half::int(num)),
                "2" => Ok(Half(num)),
                _ => Err(bad()),
            };
        }
        if let Ok(k) = s.parse::<i64>() {
            return Ok(Half::int(k));
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        let t = (2.0 * x).round();
        if (t - 2.0 * x).abs() > 1e-9 {
            return Err(bad());
        }
        Ok(Half(t as i64))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Relation {
    Lt,
    Eq,
    Gt,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Lt, Relation::Eq, Relation::Gt];

    fn symbol(self) -> char {
        match self {
            Relation::Lt => '<',
            Relation::Eq => '=',
            Relation::Gt => '>',
        }
    }
}

/// One factor `{x_axis σ threshold}` of a translated coordinate cone.
///
/// `axis` is zero-based; the text form `x1<3/2` is one-based like the usual
/// coordinate names.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ConeConstraint {
    pub axis: usize,
    pub relation: Relation,
    pub threshold: Half,
}

impl ConeConstraint {
    pub fn new(axis: usize, relation: Relation, threshold: Half) -> Self {
        ConeConstraint {
            axis,
            relation,
            threshold,
        }
    }

    pub fn lt(axis: usize, threshold: Half) -> Self {
        Self::new(axis, Relation::Lt, threshold)
    }

    pub fn eq(axis: usize, threshold: Half) -> Self {
        Self::new(axis, Relation::Eq, threshold)
    }

    pub fn gt(axis: usize, threshold: Half) -> Self {
        Self::new(axis, Relation::Gt, threshold)
    }
}

impl fmt::Display for ConeConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}{}{}", self.axis + 1, self.relation.symbol(), self.threshold)
    }
}

impl FromStr for ConeConstraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("not a cone constraint: {s:?}"));
        let body = s.strip_prefix('x').ok_or_else(bad)?;
        let pos = body.find(['<', '=', '>']).ok_or_else(bad)?;
        let axis: usize = body[..pos].parse().map_err(|_| bad())?;
        if axis == 0 {
            return Err(bad());
        }
        let relation = match &body[pos..pos + 1] {
            "<" => Relation::Lt,
            "=" => Relation::Eq,
            _ => Relation::Gt,
        };
        let threshold = body[pos + 1..].parse()?;
        Ok(ConeConstraint::new(axis - 1, relation, threshold))
    }
}

/// Formats a cone as `[x1<1,x2=3/2]`.
pub fn format_cone(cone: &[ConeConstraint]) -> String {
    let parts: Vec<String> = cone.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn parse_cone(s: &str) -> Result<Vec<ConeConstraint>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::InvalidArgument(format!("cone must be bracketed: {s:?}")))?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VoxelSet {
    dim: usize,
    cells: Vec<CellCoords>,
}

/// A face of the image of a projection that lies in the closure of the
/// image cells but not in the true projection; `axis` is a coordinate along
/// which the face is degenerate, so the line through it in that direction
/// meets the projection on both sides of the face but not at it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionGap {
    pub face: GridFace,
    pub axis: usize,
}

impl ProjectionGap {
    /// A cone (in the projected coordinates) cutting out that line.
    pub fn line_cone(&self) -> Vec<ConeConstraint> {
        (0..self.face.dim_ambient())
            .filter(|&j| j != self.axis)
            .map(|j| {
                let (lo, extended) = self.face.interval(j);
                let t = if extended {
                    Half::mid(lo as i64)
                } else {
                    Half::int(lo as i64)
                };
                ConeConstraint::eq(j, t)
            })
            .collect()
    }
}

fn pad(coords: &[i32]) -> CellCoords {
    let mut c = [0; MAX_DIM];
    c[..coords.len()].copy_from_slice(coords);
    c
}

fn drop_coord(c: &CellCoords, axis: usize, dim: usize) -> CellCoords {
    let mut out = [0; MAX_DIM];
    let mut k = 0;
    for (j, &x) in c.iter().enumerate().take(dim) {
        if j != axis {
            out[k] = x;
            k += 1;
        }
    }
    out
}

impl VoxelSet {
    pub fn new<I, C>(dim: usize, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[i32]>,
    {
        if dim > MAX_DIM {
            return Err(Error::CapExceeded {
                what: "voxel dimension",
                value: dim,
                cap: MAX_DIM,
            });
        }
        let mut out = Vec::new();
        for c in cells {
            let c = c.as_ref();
            if c.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.len(),
                });
            }
            out.push(pad(c));
        }
        Ok(Self::from_padded(dim, out))
    }

    fn from_padded(dim: usize, mut cells: Vec<CellCoords>) -> Self {
        cells.sort_unstable();
        cells.dedup();
        VoxelSet { dim, cells }
    }

    pub fn empty(dim: usize) -> Self {
        VoxelSet { dim, cells: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = &[i32]> + '_ {
        self.cells.iter().map(move |c| &c[..self.dim])
    }

    pub(crate) fn padded_cells(&self) -> &[CellCoords] {
        &self.cells
    }

    pub fn contains_cell(&self, cell: &[i32]) -> bool {
        debug_assert_eq!(cell.len(), self.dim);
        self.cells.binary_search(&pad(cell)).is_ok()
    }

    pub(crate) fn contains_padded(&self, cell: &CellCoords) -> bool {
        self.cells.binary_search(cell).is_ok()
    }

    /// Inclusive per-axis range of cell lower corners.
    pub fn bounding_box(&self) -> Option<Vec<(i32, i32)>> {
        let first = self.cells.first()?;
        let mut bb: Vec<(i32, i32)> = (0..self.dim).map(|j| (first[j], first[j])).collect();
        for c in &self.cells {
            for (j, b) in bb.iter_mut().enumerate() {
                b.0 = b.0.min(c[j]);
                b.1 = b.1.max(c[j]);
            }
        }
        Some(bb)
    }

    /// Cells incident to the point `p`: on an integer coordinate `k` both
    /// `k-1` and `k` qualify, otherwise only `floor(p_j)`.
    pub fn incident_cells(p: &[Half]) -> Vec<CellCoords> {
        let mut out = vec![[0; MAX_DIM]];
        for (j, &x) in p.iter().enumerate() {
            let choices: Vec<i32> = if x.is_integer() {
                vec![(x.floor() - 1) as i32, x.floor() as i32]
            } else {
                vec![x.floor() as i32]
            };
            out = out
                .into_iter()
                .flat_map(|c| {
                    choices.iter().map(move |&v| {
                        let mut c = c;
                        c[j] = v;
                        c
                    })
                })
                .collect();
        }
        out
    }

    pub fn contains_point(&self, p: &[Half]) -> bool {
        assert_eq!(p.len(), self.dim);
        !self.is_empty() && Self::incident_cells(p).iter().all(|c| self.contains_padded(c))
    }

    /// `U ∩ X_{j1,σ1,c1} ∩ … ∩ X_{jk,σk,ck}`, with every equality factor
    /// removing its coordinate. Axes refer to coordinates of `self`.
    pub fn intersect_cone(&self, cone: &[ConeConstraint]) -> Result<VoxelSet> {
        let mut seen = [false; MAX_DIM];
        for c in cone {
            if c.axis >= self.dim {
                return Err(Error::InvalidAxis {
                    axis: c.axis,
                    dim: self.dim,
                });
            }
            if std::mem::replace(&mut seen[c.axis], true) {
                return Err(Error::RepeatedAxis(c.axis));
            }
        }
        let mut cur = self.clone();
        for c in cone.iter().filter(|c| c.relation != Relation::Eq) {
            cur = cur.half_space(*c);
        }
        let mut eqs: Vec<&ConeConstraint> = cone.iter().filter(|c| c.relation == Relation::Eq).collect();
        eqs.sort_by_key(|c| std::cmp::Reverse(c.axis));
        for c in eqs {
            cur = cur.slice(c.axis, c.threshold);
        }
        Ok(cur)
    }

    /// Applies a single factor on one axis. Equality removes the axis.
    pub(crate) fn apply(&self, c: ConeConstraint) -> VoxelSet {
        match c.relation {
            Relation::Eq => self.slice(c.axis, c.threshold),
            _ => self.half_space(c),
        }
    }

    fn half_space(&self, c: ConeConstraint) -> VoxelSet {
        let j = c.axis;
        let cells = match c.relation {
            // a_j + 1 <= ceil(t)
            Relation::Lt => {
                let top = c.threshold.ceil() - 1;
                self.cells.iter().filter(|x| x[j] as i64 <= top).copied().collect()
            }
            // a_j >= floor(t)
            Relation::Gt => {
                let bottom = c.threshold.floor();
                self.cells.iter().filter(|x| x[j] as i64 >= bottom).copied().collect()
            }
            Relation::Eq => unreachable!(),
        };
        VoxelSet { dim: self.dim, cells }
    }

    fn slice(&self, j: usize, t: Half) -> VoxelSet {
        let dim = self.dim - 1;
        if !t.is_integer() {
            let k = t.floor();
            let cells = self
                .cells
                .iter()
                .filter(|x| x[j] as i64 == k)
                .map(|x| drop_coord(x, j, self.dim))
                .collect();
            return Self::from_padded(dim, cells);
        }
        let k = t.floor() as i32;
        let cells = self
            .cells
            .iter()
            .filter(|x| x[j] == k)
            .filter(|x| {
                let mut below = **x;
                below[j] = k - 1;
                self.contains_padded(&below)
            })
            .map(|x| drop_coord(x, j, self.dim))
            .collect();
        Self::from_padded(dim, cells)
    }

    /// Image cell set after dropping `axis`.
    pub fn project(&self, axis: usize) -> Result<VoxelSet> {
        if axis >= self.dim {
            return Err(Error::InvalidAxis { axis, dim: self.dim });
        }
        let cells = self.cells.iter().map(|c| drop_coord(c, axis, self.dim)).collect();
        Ok(Self::from_padded(self.dim - 1, cells))
    }

    /// The projection of the open set along `axis`, when it is itself the
    /// interior of its image cells; otherwise a face of the image where the
    /// two differ.
    ///
    /// A point `x'` of the projected space lies in the true projection iff
    /// some level `m` has `(g, m)` selected for every cell `g` incident to
    /// `x'`.
    pub fn project_exact(&self, axis: usize) -> Result<std::result::Result<VoxelSet, ProjectionGap>> {
        let image = self.project(axis)?;
        let mut columns: HashMap<CellCoords, Vec<i32>> = HashMap::new();
        for c in &self.cells {
            columns.entry(drop_coord(c, axis, self.dim)).or_default().push(c[axis]);
        }
        for col in columns.values_mut() {
            col.sort_unstable();
        }
        let mut gap: Option<GridFace> = None;
        for face in image.open_faces() {
            if face.dim() == image.dim {
                continue;
            }
            if gap.is_some_and(|g| g.dim() >= face.dim()) {
                continue;
            }
            let incident = face.incident_cells();
            let mut common: Vec<i32> = columns[&incident[0]].clone();
            for g in &incident[1..] {
                let col = &columns[g];
                common.retain(|m| col.binary_search(m).is_ok());
                if common.is_empty() {
                    break;
                }
            }
            if common.is_empty() {
                gap = Some(face);
            }
        }
        Ok(match gap {
            None => Ok(image),
            Some(face) => {
                let axis = (0..image.dim)
                    .find(|&j| !face.interval(j).1)
                    .expect("a lower-dimensional face has a degenerate axis");
                Err(ProjectionGap { face, axis })
            }
        })
    }

    /// True-projection membership of a point of the projected space.
    pub fn projection_contains(&self, axis: usize, p: &[Half]) -> Result<bool> {
        if axis >= self.dim {
            return Err(Error::InvalidAxis { axis, dim: self.dim });
        }
        assert_eq!(p.len() + 1, self.dim);
        let incident = Self::incident_cells(p);
        let levels: Vec<i32> = {
            let mut l: Vec<i32> = self.cells.iter().map(|c| c[axis]).collect();
            l.sort_unstable();
            l.dedup();
            l
        };
        Ok(levels.iter().any(|&m| {
            incident.iter().all(|g| {
                let mut full = [0; MAX_DIM];
                let mut k = 0;
                for (j, slot) in full.iter_mut().enumerate().take(self.dim) {
                    if j == axis {
                        *slot = m;
                    } else {
                        *slot = g[k];
                        k += 1;
                    }
                }
                self.contains_padded(&full)
            })
        }))
    }

    /// Faces of the selected cells whose relative interiors lie in `U`.
    pub fn open_faces(&self) -> Vec<GridFace> {
        let mut faces: Vec<GridFace> = self
            .cells
            .iter()
            .flat_map(|c| GridFace::cube(&c[..self.dim]).subfaces())
            .collect();
        faces.sort_unstable();
        faces.dedup();
        faces.retain(|f| f.incident_cells().iter().all(|c| self.contains_padded(c)));
        faces
    }

    /// Number of connected components of `U`, via shared facets.
    pub fn component_count(&self) -> usize {
        let n = self.cells.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(i) = queue.pop_front() {
                let c = self.cells[i];
                for j in 0..self.dim {
                    for d in [-1, 1] {
                        let mut nb = c;
                        nb[j] += d;
                        if let Ok(k) = self.cells.binary_search(&nb) {
                            if label[k] == usize::MAX {
                                label[k] = count;
                                queue.push_back(k);
                            }
                        }
                    }
                }
            }
            count += 1;
        }
        count
    }

    /// Connectedness of `U`; the empty set counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Parses one or more sets from the voxel text format; each set starts
    /// with its own `dim <n>` line.
    pub fn parse_stream(text: &str) -> Result<Vec<VoxelSet>> {
        let mut sets = Vec::new();
        let mut current: Option<(usize, Vec<Vec<i32>>)> = None;
        for (i, line) in text.lines().enumerate() {
            let ln = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("dim") {
                if let Some((d, cells)) = current.take() {
                    sets.push(VoxelSet::new(d, cells)?);
                }
                let d: usize = rest.trim().parse().map_err(|_| parse_err(ln, "bad dimension"))?;
                if d > MAX_DIM {
                    return Err(Error::CapExceeded {
                        what: "voxel dimension",
                        value: d,
                        cap: MAX_DIM,
                    });
                }
                current = Some((d, Vec::new()));
                continue;
            }
            let (d, cells) = current
                .as_mut()
                .ok_or_else(|| parse_err(ln, "cell before `dim` header"))?;
            let cell: Vec<i32> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| parse_err(ln, format!("bad coordinate {t:?}"))))
                .collect::<Result<_>>()?;
            if cell.len() != *d {
                return Err(parse_err(ln, format!("expected {d} coordinates, found {}", cell.len())));
            }
            cells.push(cell);
        }
        let (d, cells) = current.ok_or_else(|| parse_err(1, "missing `dim` header"))?;
        sets.push(VoxelSet::new(d, cells)?);
        Ok(sets)
    }
}

impl fmt::Debug for VoxelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VoxelSet(dim {}, ", self.dim)?;
        f.debug_list().entries(self.cells()).finish()?;
        write!(f, ")")
    }
}

/// Voxel text format: `dim <n>` then one cell per line.
impl fmt::Display for VoxelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        for c in self.cells() {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for VoxelSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut sets = Self::parse_stream(s)?;
        if sets.len() != 1 {
            return Err(parse_err(1, format!("expected one voxel set, found {}", sets.len())));
        }
        Ok(sets.remove(0))
    }
}

/// Half-grid sample of one axis: `lo - 1/2, lo, …, hi + 3/2` for cells
/// `lo..=hi`, i.e. the cell range widened by half a unit on each side.
pub fn half_grid_values(lo: i32, hi: i32) -> Vec<Half> {
    (2 * lo as i64 - 1..=2 * (hi as i64 + 1) + 1)
        .map(Half::from_twice)
        .collect()
}

/// Commonly used small shapes.
pub mod shapes {
    use super::VoxelSet;

    pub fn l_tromino() -> VoxelSet {
        VoxelSet::new(2, [[0, 0], [1, 0], [0, 1]]).unwrap()
    }

    pub fn u_pentomino() -> VoxelSet {
        VoxelSet::new(2, [[0, 0], [1, 0], [2, 0], [0, 1], [2, 1]]).unwrap()
    }

    pub fn diagonal_pair() -> VoxelSet {
        VoxelSet::new(2, [[0, 0], [1, 1]]).unwrap()
    }

    pub fn staircase() -> VoxelSet {
        VoxelSet::new(2, [[0, 0], [1, 0], [1, 1]]).unwrap()
    }

    pub fn unit_cell(dim: usize) -> VoxelSet {
        VoxelSet::new(dim, [vec![0; dim]]).unwrap()
    }
}
