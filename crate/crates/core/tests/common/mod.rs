//! Brute-force oracles written from the definitions, sharing no code with
//! the library beyond its data types.

#![allow(dead_code)]

use std::collections::VecDeque;

use semimonotone::VoxelSet;

// ---------------------------------------------------------------- Boolean

/// Truth table with bit `j` of the index holding variable `j`.
pub type Table = Vec<bool>;

pub fn table_of(psi: &semimonotone::BooleanFunction) -> Table {
    (0..psi.table_len()).map(|i| psi.value(i)).collect()
}

fn n_of(t: &Table) -> usize {
    t.len().trailing_zeros() as usize
}

fn insert_bit(i: usize, j: usize, c: bool) -> usize {
    let low = i & ((1 << j) - 1);
    (i >> j << (j + 1)) | (usize::from(c) << j) | low
}

pub fn restrict(t: &Table, j: usize, c: bool) -> Table {
    let n = n_of(t);
    (0..1usize << (n - 1)).map(|i| t[insert_bit(i, j, c)]).collect()
}

pub fn eliminate(t: &Table, j: usize, exists: bool) -> Table {
    let n = n_of(t);
    (0..1usize << (n - 1))
        .map(|i| {
            let (a, b) = (t[insert_bit(i, j, false)], t[insert_bit(i, j, true)]);
            if exists {
                a || b
            } else {
                a && b
            }
        })
        .collect()
}

/// The inductive definition, no memo, no symmetry reduction.
pub fn regular(t: &Table) -> bool {
    let n = n_of(t);
    match n {
        0 | 1 => true,
        2 => *t != [false, true, true, false] && *t != [true, false, false, true],
        _ => {
            for a in 0..n {
                for b in a + 1..n {
                    for pins in 0..1usize << (n - 2) {
                        let square: Table = (0..4)
                            .map(|s| {
                                let mut idx = 0;
                                let mut k = 0;
                                for v in 0..n {
                                    let bit = if v == a {
                                        s & 1
                                    } else if v == b {
                                        s >> 1 & 1
                                    } else {
                                        let x = pins >> k & 1;
                                        k += 1;
                                        x
                                    };
                                    idx |= bit << v;
                                }
                                t[idx]
                            })
                            .collect();
                        if !regular(&square) {
                            return false;
                        }
                    }
                }
            }
            regular(&eliminate(t, n - 1, true)) && regular(&eliminate(t, n - 1, false))
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// For every assignment of a quantifier to each variable, every order of
/// eliminating all of them gives the same constant.
pub fn order_independent_full(t: &Table) -> bool {
    let n = n_of(t);
    let perms = permutations(n);
    for kinds in 0..1usize << n {
        let mut seen = None;
        for p in &perms {
            let mut cur = t.clone();
            let mut alive: Vec<usize> = (0..n).collect();
            for &v in p {
                let pos = alive.iter().position(|&x| x == v).unwrap();
                cur = eliminate(&cur, pos, kinds >> v & 1 == 1);
                alive.remove(pos);
            }
            match seen {
                None => seen = Some(cur[0]),
                Some(c) if c != cur[0] => return false,
                _ => {}
            }
        }
    }
    true
}

// ---------------------------------------------------------------- voxels

/// Membership of `U` sampled at the points `q / scale` of a box covering
/// the closure of the cells.
pub struct Sample {
    pub dim: usize,
    pub scale: i64,
    pub lo: Vec<i64>,
    pub size: Vec<usize>,
    pub inside: Vec<bool>,
}

impl Sample {
    pub fn new(u: &VoxelSet, scale: i64) -> Sample {
        let dim = u.dim();
        let cells: Vec<Vec<i64>> = u.cells().map(|c| c.iter().map(|&x| x as i64).collect()).collect();
        let mut lo = vec![i64::MAX; dim];
        let mut hi = vec![i64::MIN; dim];
        for c in &cells {
            for j in 0..dim {
                lo[j] = lo[j].min(c[j]);
                hi[j] = hi[j].max(c[j] + 1);
            }
        }
        if cells.is_empty() {
            lo = vec![0; dim];
            hi = vec![0; dim];
        }
        let lo: Vec<i64> = lo.iter().map(|&x| x * scale).collect();
        let size: Vec<usize> = (0..dim).map(|j| (hi[j] * scale - lo[j] + 1) as usize).collect();
        let total: usize = size.iter().product();
        let set: std::collections::HashSet<Vec<i64>> = cells.into_iter().collect();
        let mut inside = vec![false; total];
        for (idx, slot) in inside.iter_mut().enumerate() {
            let q = Self::unflatten(&size, &lo, idx);
            *slot = !set.is_empty() && Self::covered(&set, &q, scale);
        }
        Sample {
            dim,
            scale,
            lo,
            size,
            inside,
        }
    }

    fn unflatten(size: &[usize], lo: &[i64], mut idx: usize) -> Vec<i64> {
        let mut q = vec![0; size.len()];
        for j in 0..size.len() {
            q[j] = lo[j] + (idx % size[j]) as i64;
            idx /= size[j];
        }
        q
    }

    pub fn point(&self, idx: usize) -> Vec<i64> {
        Self::unflatten(&self.size, &self.lo, idx)
    }

    /// Every closed cell containing the point is present.
    fn covered(set: &std::collections::HashSet<Vec<i64>>, q: &[i64], scale: i64) -> bool {
        let choices: Vec<Vec<i64>> = q
            .iter()
            .map(|&x| {
                let f = x.div_euclid(scale);
                if x.rem_euclid(scale) == 0 {
                    vec![f - 1, f]
                } else {
                    vec![f]
                }
            })
            .collect();
        let mut cell = vec![0; q.len()];
        fn rec(j: usize, choices: &[Vec<i64>], cell: &mut Vec<i64>, set: &std::collections::HashSet<Vec<i64>>) -> bool {
            if j == choices.len() {
                return set.contains(cell);
            }
            choices[j].iter().all(|&c| {
                cell[j] = c;
                rec(j + 1, choices, cell, set)
            })
        }
        rec(0, &choices, &mut cell, set)
    }

    /// Components of the sampled points of `U` accepted by `keep`, joined
    /// along single steps parallel to an axis.
    pub fn components(&self, keep: impl Fn(&[i64]) -> bool) -> usize {
        let total = self.inside.len();
        let alive: Vec<bool> = (0..total).map(|i| self.inside[i] && keep(&self.point(i))).collect();
        let mut seen = vec![false; total];
        let mut count = 0;
        let mut strides = vec![1usize; self.dim];
        for j in 1..self.dim {
            strides[j] = strides[j - 1] * self.size[j - 1];
        }
        for start in 0..total {
            if !alive[start] || seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for (&stride, &size) in strides.iter().zip(&self.size) {
                    let coord = i / stride % size;
                    let mut step = |n: usize| {
                        if alive[n] && !seen[n] {
                            seen[n] = true;
                            queue.push_back(n);
                        }
                    };
                    if coord > 0 {
                        step(i - stride);
                    }
                    if coord + 1 < size {
                        step(i + stride);
                    }
                }
            }
        }
        count
    }
}

/// Cone constraint on point coordinates in sample units: axis, relation
/// (-1 less, 0 equal, 1 greater), threshold.
pub type SampleConstraint = (usize, i8, i64);

pub fn in_cone(q: &[i64], cone: &[SampleConstraint]) -> bool {
    cone.iter().all(|&(j, rel, t)| match rel {
        -1 => q[j] < t,
        0 => q[j] == t,
        _ => q[j] > t,
    })
}

/// Semi-monotone straight from the definition: every cone with thresholds
/// at multiples of `2 / scale` meets `U` in a connected (or empty) set.
pub fn semi_monotone_by_definition(u: &VoxelSet, scale: i64) -> bool {
    let s = Sample::new(u, scale);
    if u.is_empty() {
        return true;
    }
    let per_axis: Vec<Vec<Option<(i8, i64)>>> = (0..s.dim)
        .map(|j| {
            let mut v = vec![None];
            let mut t = s.lo[j] - scale / 2;
            while t <= s.lo[j] + s.size[j] as i64 + scale / 2 {
                for rel in [-1i8, 0, 1] {
                    v.push(Some((rel, t)));
                }
                t += 2;
            }
            v
        })
        .collect();
    let mut idx = vec![0usize; s.dim];
    loop {
        let cone: Vec<SampleConstraint> = (0..s.dim)
            .filter_map(|j| per_axis[j][idx[j]].map(|(r, t)| (j, r, t)))
            .collect();
        if s.components(|q| in_cone(q, &cone)) > 1 {
            return false;
        }
        let mut j = 0;
        loop {
            if j == s.dim {
                return true;
            }
            idx[j] += 1;
            if idx[j] < per_axis[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// Components of the union of closed cells: cells touching in any face.
pub fn closed_union_components(u: &VoxelSet) -> usize {
    let cells: Vec<Vec<i32>> = u.cells().map(<[i32]>::to_vec).collect();
    let index: std::collections::HashMap<&Vec<i32>, usize> = cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut seen = vec![false; cells.len()];
    let mut count = 0;
    let d = u.dim();
    for s in 0..cells.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for code in 0..3usize.pow(d as u32) {
                let mut n = cells[i].clone();
                let mut c = code;
                for x in n.iter_mut() {
                    *x += (c % 3) as i32 - 1;
                    c /= 3;
                }
                if let Some(&k) = index.get(&n) {
                    if !seen[k] {
                        seen[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
    }
    count
}

// ---------------------------------------------------------------- simplicial

fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r] >> bit & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Z/2 Betti numbers of a complex given by its face masks,
/// indexed from degree -1.
pub fn reduced_betti(faces: &[u32]) -> Vec<usize> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] holds faces with s vertices; size 0 is the empty face
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 2];
    by_size[0].push(0);
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let rank_of = |s: usize| -> usize {
        // boundary from size s to size s - 1
        if s == 0 || s > top {
            return 0;
        }
        let lower = &by_size[s - 1];
        let rows: Vec<u64> = by_size[s]
            .iter()
            .map(|&f| {
                (0..32)
                    .filter(|b| f >> b & 1 == 1)
                    .map(|b| 1u64 << lower.iter().position(|&g| g == f & !(1 << b)).unwrap())
                    .fold(0, |a, x| a | x)
            })
            .collect();
        gf2_rank(rows)
    };
    (0..=top)
        .map(|s| by_size[s].len() - rank_of(s) - rank_of(s + 1))
        .collect()
}

pub fn acyclic(faces: &[u32]) -> bool {
    !faces.is_empty() && reduced_betti(faces).iter().all(|&b| b == 0)
}

pub fn link(faces: &[u32], v: usize) -> Vec<u32> {
    faces
        .iter()
        .filter(|&&f| f >> v & 1 == 1 && f != 1 << v)
        .map(|&f| f & !(1 << v))
        .collect()
}

/// Every down-closed family of non-empty subsets of `{0..n}`.
pub fn subcomplexes(n: usize) -> Vec<Vec<u32>> {
    let mut subsets: Vec<u32> = (1..1u32 << (n + 1)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut out = Vec::new();
    fn rec(i: usize, subsets: &[u32], chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == subsets.len() {
            out.push(chosen.clone());
            return;
        }
        rec(i + 1, subsets, chosen, out);
        let s = subsets[i];
        let closed = s.count_ones() == 1
            || (0..32)
                .filter(|b| s >> b & 1 == 1)
                .all(|b| chosen.contains(&(s & !(1 << b))));
        if closed {
            chosen.push(s);
            rec(i + 1, subsets, chosen, out);
            chosen.pop();
        }
    }
    rec(0, &subsets, &mut Vec::new(), &mut out);
    out
}

/// Length of the shortest cycle of the 1-skeleton.
pub fn girth(faces: &[u32], n_vertices: usize) -> Option<usize> {
    let edges: Vec<(usize, usize)> = faces
        .iter()
        .filter(|f| f.count_ones() == 2)
        .map(|&f| (f.trailing_zeros() as usize, 31 - f.leading_zeros() as usize))
        .collect();
    let mut best: Option<usize> = None;
    // shortest cycle through each edge: remove it and find a path
    for (k, &(a, b)) in edges.iter().enumerate() {
        let mut dist = vec![usize::MAX; n_vertices];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for (e, &(p, q)) in edges.iter().enumerate() {
                if e == k {
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
            best = Some(best.map_or(len, |g| g.min(len)));
        }
    }
    best
}
