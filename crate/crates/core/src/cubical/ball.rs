//! A combinatorial recognizer for cube unions that are PL balls.
//!
//! The tests are homological plus local connectivity, which is not a
//! certificate in general; the crate validates the recognizer against the
//! regularity of the Boolean function whose cube union is tested.

use std::collections::{BTreeMap, HashMap};

use super::{CubicalComplex, DisjointSets, GridFace};
use crate::error::{Error, Result};

pub const MAX_BALL_DIM: usize = 4;
pub const MAX_BALL_TOPS: usize = 32;

pub(crate) struct Pure {
    pub(crate) k: usize,
    pub(crate) tops: Vec<GridFace>,
}

pub(crate) fn pure_tops(complex: &CubicalComplex, max_tops: usize) -> Result<Pure> {
    if complex.is_empty() {
        return Err(Error::EmptyInput("pure complex"));
    }
    let tops = complex.maximal_faces();
    let k = tops.iter().map(GridFace::dim).max().unwrap_or(0);
    if let Some(low) = tops.iter().map(GridFace::dim).find(|&d| d < k) {
        return Err(Error::NonPure { low, high: k });
    }
    if tops.len() > max_tops {
        return Err(Error::CapExceeded {
            what: "top faces",
            value: tops.len(),
            cap: max_tops,
        });
    }
    Ok(Pure { k, tops })
}

/// Reduced ranks over all degrees `0..=max_dim`.
fn reduced_ranks(c: &CubicalComplex) -> Vec<usize> {
    let mut r = c.z2_ranks();
    r[0] -= 1;
    r
}

/// Whether the tops in `members` are connected through shared facets.
/// `shared` maps each codimension-one face to the tops containing it.
fn facet_connected(
    members: &[usize],
    shared: &BTreeMap<GridFace, Vec<usize>>,
    keep: impl Fn(&GridFace) -> bool,
) -> bool {
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut dsu = DisjointSets::new(members.len());
    for (f, ts) in shared {
        if !keep(f) {
            continue;
        }
        let inside: Vec<usize> = ts.iter().filter_map(|t| pos.get(t).copied()).collect();
        for w in inside.windows(2) {
            dsu.union(w[0], w[1]);
        }
    }
    dsu.count() <= 1
}

/// Faces of dimension at most `k - 2` around which the top cells fall into
/// more than one facet-connected group.
pub fn pinch_faces(complex: &CubicalComplex) -> Result<Vec<GridFace>> {
    let p = pure_tops(complex, usize::MAX)?;
    Ok(pinches(&p))
}

fn codim_one(p: &Pure) -> BTreeMap<GridFace, Vec<usize>> {
    let mut shared: BTreeMap<GridFace, Vec<usize>> = BTreeMap::new();
    for (i, t) in p.tops.iter().enumerate() {
        for f in t.facets() {
            shared.entry(f).or_default().push(i);
        }
    }
    shared
}

fn pinches(p: &Pure) -> Vec<GridFace> {
    if p.k < 2 {
        return Vec::new();
    }
    let shared = codim_one(p);
    let mut around: BTreeMap<GridFace, Vec<usize>> = BTreeMap::new();
    for (i, t) in p.tops.iter().enumerate() {
        for f in t.subfaces() {
            if f.dim() + 2 <= p.k {
                around.entry(f).or_default().push(i);
            }
        }
    }
    around
        .into_iter()
        .filter(|(f, ts)| ts.len() >= 2 && !facet_connected(ts, &shared, |g| g.contains(f)))
        .map(|(f, _)| f)
        .collect()
}

/// Whether the complex looks like a PL ball of its top dimension.
///
/// Requires a pure complex of ambient dimension at most 4 with at most 32
/// top faces. A `k`-dimensional complex passes when its top faces are
/// facet-connected, it is Z/2-acyclic, every `(k-1)`-face lies in at most
/// two top faces, the faces lying in exactly one span a Z/2 homology
/// `(k-1)`-sphere, no lower face is a pinch point, and the link of every
/// lower face has the Z/2 homology of a ball (on the boundary) or of a
/// sphere (in the interior).
pub fn is_pl_ball(complex: &CubicalComplex) -> Result<bool> {
    if complex.dim_ambient() > MAX_BALL_DIM {
        return Err(Error::CapExceeded {
            what: "ambient dimension",
            value: complex.dim_ambient(),
            cap: MAX_BALL_DIM,
        });
    }
    if complex.is_empty() {
        return Ok(false);
    }
    let p = pure_tops(complex, MAX_BALL_TOPS)?;
    if p.k == 0 {
        return Ok(p.tops.len() == 1);
    }
    let shared = codim_one(&p);
    let all: Vec<usize> = (0..p.tops.len()).collect();
    if !facet_connected(&all, &shared, |_| true) {
        return Ok(false);
    }
    if reduced_ranks(complex).iter().any(|&r| r != 0) {
        return Ok(false);
    }
    if shared.values().any(|ts| ts.len() > 2) {
        return Ok(false);
    }
    let boundary = CubicalComplex::from_top_faces(
        complex.dim_ambient(),
        shared.iter().filter(|(_, ts)| ts.len() == 1).map(|(f, _)| *f),
    )?;
    if boundary.is_empty() {
        return Ok(false);
    }
    let sphere: Vec<usize> = (0..p.k).map(|d| usize::from(d == p.k - 1)).collect();
    let mut got = reduced_ranks(&boundary);
    got.resize(p.k, 0);
    if got != sphere {
        return Ok(false);
    }
    if !pinches(&p).is_empty() {
        return Ok(false);
    }
    Ok(links_are_local_balls(complex, p.k, &boundary))
}

/// Link of each face as a simplicial complex: a face `G` containing `F`
/// contributes the simplex of edge directions of `G` leaving `F`, one bit
/// per coordinate and sign.
fn face_links(complex: &CubicalComplex) -> BTreeMap<GridFace, Vec<u16>> {
    let n = complex.dim_ambient();
    let mut links: BTreeMap<GridFace, Vec<u16>> = BTreeMap::new();
    for g in complex.faces() {
        for f in g.subfaces() {
            if f == *g {
                continue;
            }
            let mut mask = 0u16;
            for j in 0..n {
                let (a, ea) = g.interval(j);
                let (b, eb) = f.interval(j);
                if ea && !eb {
                    mask |= 1 << (2 * j + usize::from(a != b));
                }
            }
            links.entry(f).or_default().push(mask);
        }
    }
    links
}

/// Reduced Z/2 ranks of a simplicial complex given as a closed list of
/// non-empty vertex masks.
pub(crate) fn simplicial_reduced_ranks(simplices: &[u16]) -> Vec<usize> {
    let top = simplices.iter().map(|s| s.count_ones() as usize).max().unwrap_or(1);
    let mut by_dim: Vec<Vec<u16>> = vec![Vec::new(); top];
    for &s in simplices {
        by_dim[s.count_ones() as usize - 1].push(s);
    }
    let index: Vec<HashMap<u16, usize>> = by_dim
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, s)| (*s, i)).collect())
        .collect();
    let counts: Vec<usize> = by_dim.iter().map(Vec::len).collect();
    let mut ranks = super::z2_betti_from_boundaries(&counts, |k, i| {
        let s = by_dim[k][i];
        (0..16)
            .filter(|b| s >> b & 1 == 1)
            .map(|b| index[k - 1][&(s & !(1 << b))])
            .collect()
    });
    ranks[0] -= 1;
    ranks
}

/// Every face below the top dimension must have the link of a boundary
/// point (acyclic) when it lies on the boundary, and of an interior point
/// (a homology sphere of the complementary dimension) otherwise.
fn links_are_local_balls(complex: &CubicalComplex, k: usize, boundary: &CubicalComplex) -> bool {
    face_links(complex).into_iter().all(|(f, simplices)| {
        let d = k - f.dim() - 1;
        let mut ranks = simplicial_reduced_ranks(&simplices);
        ranks.resize(d + 1, 0);
        if boundary.contains(&f) {
            ranks.iter().all(|&r| r == 0)
        } else {
            ranks.iter().enumerate().all(|(i, &r)| r == usize::from(i == d))
        }
    })
}
