//! Simplicial complexes on at most six vertices.
//!
//! A face is a bit mask of vertices, and a complex is the set of its face
//! masks packed into one `u64`: bit `m` is set when the face `m` belongs
//! to the complex. The empty face is never stored.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::boolean::{all_functions, BooleanFunction};
use crate::cubical::{z2_betti_from_boundaries, BettiVector};
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 6;
pub const MAX_ENUMERATION_N: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    n_vertices: usize,
    faces: u64,
}

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

fn vertices_of(mask: u64) -> impl Iterator<Item = usize> {
    (0..MAX_VERTICES).filter(move |v| mask >> v & 1 == 1)
}

/// Bit set of all non-empty subsets of `mask`.
fn down_closure(mask: u64) -> u64 {
    let mut out = 0u64;
    let mut s = mask;
    while s != 0 {
        out |= 1 << s;
        s = (s - 1) & mask;
    }
    out
}

impl SimplicialComplex {
    pub fn new(n_vertices: usize) -> Result<Self> {
        if n_vertices > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertices",
                value: n_vertices,
                cap: MAX_VERTICES,
            });
        }
        Ok(SimplicialComplex { n_vertices, faces: 0 })
    }

    /// The downward closure of the given faces, each a list of vertices.
    pub fn from_maximal<F: AsRef<[usize]>>(n_vertices: usize, tops: &[F]) -> Result<Self> {
        let mut c = Self::new(n_vertices)?;
        for t in tops {
            let t = t.as_ref();
            if let Some(&v) = t.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::NoSuchVertex(v));
            }
            if t.is_empty() {
                continue;
            }
            c.faces |= down_closure(mask_of(t));
        }
        Ok(c)
    }

    /// A complex from its face bit set, which must be downward closed.
    pub fn from_bits(n_vertices: usize, faces: u64) -> Result<Self> {
        let c = Self::new(n_vertices)?;
        let verts = (1u64 << n_vertices) - 1;
        for m in 1..64u64 {
            if faces >> m & 1 == 1 && (m & !verts != 0 || down_closure(m) & !faces != 0) {
                return Err(Error::NotClosed);
            }
        }
        if faces & 1 != 0 {
            return Err(Error::NotClosed);
        }
        Ok(SimplicialComplex { faces, ..c })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn bits(&self) -> u64 {
        self.faces
    }

    pub fn is_empty(&self) -> bool {
        self.faces == 0
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        face.iter().all(|&v| v < MAX_VERTICES) && self.faces >> mask_of(face) & 1 == 1
    }

    /// Face masks in increasing order.
    pub fn face_masks(&self) -> impl Iterator<Item = u64> + '_ {
        (1..64u64).filter(|m| self.faces >> m & 1 == 1)
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut fs: Vec<u64> = self.face_masks().collect();
        fs.sort_by_key(|&m| (m.count_ones(), vertices_of(m).collect::<Vec<_>>()));
        fs.into_iter().map(|m| vertices_of(m).collect()).collect()
    }

    pub fn maximal_faces(&self) -> Vec<Vec<usize>> {
        let masks: Vec<u64> = self.face_masks().collect();
        let mut tops: Vec<u64> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & m == m))
            .collect();
        tops.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), vertices_of(m).collect::<Vec<_>>()));
        tops.into_iter().map(|m| vertices_of(m).collect()).collect()
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.n_vertices)
            .filter(|&v| self.faces >> (1u64 << v) & 1 == 1)
            .collect()
    }

    /// Dimension of the largest face; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.face_masks().map(|m| m.count_ones() as usize - 1).max()
    }

    /// Non-reduced Z/2 ranks in degrees `0..=dim`.
    pub(crate) fn z2_ranks(&self) -> Vec<usize> {
        let Some(top) = self.dim() else {
            return Vec::new();
        };
        let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for m in self.face_masks() {
            by_dim[m.count_ones() as usize - 1].push(m);
        }
        let index: Vec<HashMap<u64, usize>> = by_dim
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, &m)| (m, i)).collect())
            .collect();
        let counts: Vec<usize> = by_dim.iter().map(Vec::len).collect();
        z2_betti_from_boundaries(&counts, |k, i| {
            let m = by_dim[k][i];
            vertices_of(m).map(|v| index[k - 1][&(m & !(1 << v))]).collect()
        })
    }

    /// Z/2 homology ranks in degrees `0..max(n_vertices - 1, 1)`.
    pub fn betti_z2(&self, reduced: bool) -> Result<BettiVector> {
        if reduced && self.is_empty() {
            return Err(Error::EmptyInput("reduced homology"));
        }
        let mut ranks = self.z2_ranks();
        if reduced {
            ranks[0] -= 1;
        }
        let len = self.n_vertices.saturating_sub(1).max(1);
        if ranks.len() > len {
            debug_assert!(ranks[len..].iter().all(|&r| r == 0));
            ranks.truncate(len);
        }
        ranks.resize(len, 0);
        Ok(BettiVector { reduced, ranks })
    }

    /// Non-empty with vanishing reduced Z/2 homology.
    pub fn is_acyclic(&self) -> bool {
        !self.is_empty() && self.betti_z2(true).map(|b| b.is_acyclic()).unwrap_or(false)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n_vertices || self.faces >> (1u64 << v) & 1 == 0 {
            return Err(Error::NoSuchVertex(v));
        }
        Ok(())
    }

    /// Faces `F` with `v ∉ F` and `F ∪ {v}` a face.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let bit = 1u64 << v;
        let faces = self
            .face_masks()
            .filter(|&m| m & bit == 0 && self.faces >> (m | bit) & 1 == 1)
            .fold(0u64, |acc, m| acc | 1 << m);
        Ok(SimplicialComplex { faces, ..*self })
    }

    /// Faces not containing `v`.
    pub fn deletion(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let faces = self
            .face_masks()
            .filter(|&m| m >> v & 1 == 0)
            .fold(0u64, |acc, m| acc | 1 << m);
        Ok(SimplicialComplex { faces, ..*self })
    }

    /// The faces containing `v` together with all their faces.
    pub fn closed_star(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let faces = self
            .face_masks()
            .filter(|&m| m >> v & 1 == 1)
            .fold(0u64, |acc, m| acc | down_closure(m));
        Ok(SimplicialComplex { faces, ..*self })
    }

    /// Length of the shortest cycle in the 1-skeleton, if any.
    pub fn girth(&self) -> Option<usize> {
        let edges: Vec<(usize, usize)> = self
            .face_masks()
            .filter(|m| m.count_ones() == 2)
            .map(|m| {
                let mut it = vertices_of(m);
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect();
        let mut best: Option<usize> = None;
        for &(a, b) in &edges {
            // shortest a-b path avoiding the edge itself closes a cycle
            let mut dist = [usize::MAX; MAX_VERTICES];
            dist[a] = 0;
            let mut queue = VecDeque::from([a]);
            while let Some(x) = queue.pop_front() {
                for &(p, q) in &edges {
                    if (p, q) == (a, b) {
                        continue;
                    }
                    let y = if p == x {
                        q
                    } else if q == x {
                        p
                    } else {
                        continue;
                    };
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[b] != usize::MAX {
                let len = dist[b] + 1;
                best = Some(best.map_or(len, |c| c.min(len)));
            }
        }
        best
    }

    /// Vertices whose link is non-empty and acyclic.
    pub fn acyclic_link_vertices(&self) -> Vec<usize> {
        self.vertices()
            .into_iter()
            .filter(|&v| self.link(v).map(|l| l.is_acyclic()).unwrap_or(false))
            .collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex({self})")
    }
}

/// Maximal faces as vertex strings, e.g. `{012, 35}`.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tops: Vec<String> = self
            .maximal_faces()
            .iter()
            .map(|t| t.iter().map(|v| v.to_string()).collect())
            .collect();
        write!(f, "{{{}}}", tops.join(", "))
    }
}

/// Summary of the exhaustive acyclic-link verification on `Δⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicLinkReport {
    pub n: usize,
    /// Subcomplexes enumerated, the empty one included.
    pub families: u64,
    /// The same number counted independently from monotone functions.
    pub expected_families: u64,
    pub acyclic: u64,
    /// Acyclic single vertices: their links are empty, so they are
    /// counted apart from the rest.
    pub single_vertices: u64,
    pub violations: Vec<SimplicialComplex>,
}

impl AcyclicLinkReport {
    pub fn passed(&self) -> bool {
        self.families == self.expected_families && self.violations.is_empty()
    }
}

/// Number of monotone Boolean functions of `k` variables, counted as pairs
/// `f0 <= f1` of monotone functions of `k - 1` variables.
pub fn monotone_count(k: usize) -> u64 {
    if k == 0 {
        return 2;
    }
    let monotone: Vec<BooleanFunction> = all_functions(k - 1).filter(is_monotone).collect();
    let tables: Vec<u64> = monotone.iter().map(|f| f.as_u64()).collect();
    let mut count = 0;
    for &a in &tables {
        for &b in &tables {
            if a & !b == 0 {
                count += 1;
            }
        }
    }
    count
}

fn is_monotone(f: &BooleanFunction) -> bool {
    let n = f.n_vars();
    (0..f.table_len()).all(|i| !f.value(i) || (0..n).all(|j| f.value(i | 1 << j)))
}

/// Every subcomplex of the `n`-simplex that is acyclic and not a single
/// vertex must have a vertex whose link is non-empty and acyclic.
pub fn verify_acyclic_link(n: usize) -> Result<AcyclicLinkReport> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::CapExceeded {
            what: "simplex dimension",
            value: n,
            cap: MAX_ENUMERATION_N,
        });
    }
    let n_vertices = n + 1;
    // faces of the simplex, dimension-major
    let mut lattice: Vec<u64> = (1..1u64 << n_vertices).collect();
    lattice.sort_by_key(|m| (m.count_ones(), *m));
    let mut report = AcyclicLinkReport {
        n,
        families: 0,
        // complexes correspond to down-sets of the subset lattice that
        // contain the empty set, i.e. all down-sets but the empty one
        expected_families: monotone_count(n_vertices) - 1,
        acyclic: 0,
        single_vertices: 0,
        violations: Vec::new(),
    };
    let mut visit = |faces: u64| {
        report.families += 1;
        let x = SimplicialComplex { n_vertices, faces };
        if !x.is_acyclic() {
            return;
        }
        report.acyclic += 1;
        if faces.count_ones() == 1 {
            report.single_vertices += 1;
        } else if x.acyclic_link_vertices().is_empty() {
            report.violations.push(x);
        }
    };
    down_sets(&lattice, 0, 0, &mut visit);
    Ok(report)
}

/// Streams every downward-closed selection from `lattice[i..]` on top of
/// `chosen`; a face may be taken only once all its facets are.
fn down_sets(lattice: &[u64], i: usize, chosen: u64, visit: &mut impl FnMut(u64)) {
    let Some(&m) = lattice.get(i) else {
        visit(chosen);
        return;
    };
    down_sets(lattice, i + 1, chosen, visit);
    let facets_present = m.count_ones() == 1 || vertices_of(m).all(|v| chosen >> (m & !(1 << v)) & 1 == 1);
    if facets_present {
        down_sets(lattice, i + 1, chosen | 1 << m, visit);
    }
}

/// The six-vertex acyclic complex in which no vertex has an acyclic link:
/// a hexagon, three tetrahedron boundaries each missing one triangle, and
/// the triangle `135`.
pub fn build_counterexample_5() -> SimplicialComplex {
    let tops: [&[usize]; 16] = [
        &[0, 1],
        &[1, 2],
        &[2, 3],
        &[3, 4],
        &[4, 5],
        &[5, 0],
        &[0, 1, 2],
        &[0, 2, 3],
        &[1, 2, 3],
        &[2, 3, 4],
        &[2, 4, 5],
        &[3, 4, 5],
        &[4, 5, 0],
        &[4, 0, 1],
        &[5, 0, 1],
        &[1, 3, 5],
    ];
    SimplicialComplex::from_maximal(6, &tops).expect("vertices 0..5")
}
