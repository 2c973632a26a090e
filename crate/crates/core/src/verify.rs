//! Exhaustive and sampled verification suites.
//!
//! Each suite checks one statement over a list of instances in parallel
//! and reports how many instances were checked together with the first
//! few failures, in instance order.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::boolean::{
    all_functions, cube_union, is_order_independent, is_regular, is_regular_unmemoized, symmetry_orbit, BooleanFunction,
};
use crate::cubical::is_pl_ball;
use crate::error::{Error, Result};
use crate::semimonotone::{
    check, check_definition, is_regular_cell_evidence, octant_function, regular_cell_evidence, Method,
};
use crate::simplicial::{build_counterexample_5, verify_acyclic_link};
use crate::voxel::{half_grid_values, ConeConstraint, Half, Relation, VoxelSet};

const KEPT_FAILURES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub checked: usize,
    pub failure_count: usize,
    /// The first failures, described.
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={} checked={} failures={} status={}",
            self.name,
            self.checked,
            self.failure_count,
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

/// Runs `check` on every item; `None` means the item passed. Items for
/// which the statement is vacuous should be filtered out beforehand.
pub fn run_suite<T, F>(name: &str, items: &[T], check: F) -> SuiteResult
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    let outcomes: Vec<Option<String>> = items.par_iter().map(&check).collect();
    let failures: Vec<String> = outcomes.into_iter().flatten().collect();
    SuiteResult {
        name: name.to_string(),
        checked: items.len(),
        failure_count: failures.len(),
        failures: failures.into_iter().take(KEPT_FAILURES).collect(),
    }
}

fn bits(psi: &BooleanFunction) -> String {
    (0..psi.table_len())
        .map(|i| if psi.value(i) { '1' } else { '0' })
        .collect()
}

/// Regularity agrees with order independence of quantifier eliminations.
pub fn commute_suite(functions: &[BooleanFunction]) -> SuiteResult {
    run_suite("commute", functions, |psi| match is_order_independent(psi) {
        Ok(ind) if ind == is_regular(psi) => None,
        Ok(ind) => Some(format!("{}: regular={} order_independent={ind}", bits(psi), !ind)),
        Err(e) => Some(format!("{}: {e}", bits(psi))),
    })
}

/// Regularity agrees with the cube union being a ball (nothing for `ψ ≡ 0`).
pub fn cube_suite(functions: &[BooleanFunction]) -> SuiteResult {
    run_suite("cube", functions, |psi| {
        let expected = is_regular(psi) && psi.constant_value() != Some(false);
        let c = cube_union(psi);
        let got = if c.is_empty() { Ok(false) } else { is_pl_ball(&c) };
        match got {
            Ok(b) if b == expected => None,
            Ok(b) => Some(format!("{}: regular={expected} ball={b}", bits(psi))),
            Err(e) => Some(format!("{}: {e}", bits(psi))),
        }
    })
}

fn is_diagonal_pair(points: &[usize]) -> bool {
    points.len() == 2 && points[0] ^ points[1] == 0b111
}

/// Three variables with regular restrictions: a non-regular `E_3` forces a
/// true set that is a pair of opposite vertices, dually for `A_3`.
pub fn three_suite() -> SuiteResult {
    let all: Vec<BooleanFunction> = all_functions(3).collect();
    let eligible: Vec<BooleanFunction> = all
        .into_iter()
        .filter(|psi| (0..3).all(|j| [false, true].iter().all(|&c| is_regular(&psi.restrict(j, c).unwrap()))))
        .collect();
    run_suite("three", &eligible, |psi| {
        let e = psi.exists_elim(2).unwrap();
        let a = psi.forall_elim(2).unwrap();
        let false_set: Vec<usize> = (0..8).filter(|&i| !psi.value(i)).collect();
        if !is_regular(&e) && !is_diagonal_pair(&psi.true_set()) {
            return Some(format!("{}: E3 not regular, true set {:?}", bits(psi), psi.true_set()));
        }
        if !is_regular(&a) && !is_diagonal_pair(&false_set) {
            return Some(format!("{}: A3 not regular, false set {false_set:?}", bits(psi)));
        }
        None
    })
}

fn regular_only(functions: &[BooleanFunction]) -> Vec<BooleanFunction> {
    functions.par_iter().filter(|psi| is_regular(psi)).cloned().collect()
}

/// For regular `ψ`: `A_j ψ ≡ 0` iff a restriction `ψ_{j,c}` is `≡ 0`, and
/// `E_j ψ ≡ 1` iff one is `≡ 1`.
pub fn zero_suite(functions: &[BooleanFunction]) -> SuiteResult {
    run_suite("zero", &regular_only(functions), |psi| {
        for j in 0..psi.n_vars() {
            let r = [psi.restrict(j, false).unwrap(), psi.restrict(j, true).unwrap()];
            let a_zero = psi.forall_elim(j).unwrap().constant_value() == Some(false);
            let e_one = psi.exists_elim(j).unwrap().constant_value() == Some(true);
            let some_zero = r.iter().any(|f| f.constant_value() == Some(false));
            let some_one = r.iter().any(|f| f.constant_value() == Some(true));
            if a_zero != some_zero || e_one != some_one {
                return Some(format!("{}: variable {}", bits(psi), j + 1));
            }
        }
        None
    })
}

/// Regularity survives symmetries and pinning a variable. Uses the
/// unmemoized decision, since the memo itself relies on this invariance.
pub fn cor_commute_suite(functions: &[BooleanFunction]) -> SuiteResult {
    run_suite("cor-commute", &regular_only(functions), |psi| {
        let orbit = match symmetry_orbit(psi) {
            Ok(o) => o,
            Err(e) => return Some(format!("{}: {e}", bits(psi))),
        };
        if let Some(bad) = orbit.iter().find(|chi| !is_regular_unmemoized(chi)) {
            return Some(format!("{}: orbit element {} not regular", bits(psi), bits(bad)));
        }
        for j in 0..psi.n_vars() {
            for c in [false, true] {
                if !is_regular_unmemoized(&psi.restrict(j, c).unwrap()) {
                    return Some(format!(
                        "{}: restriction x{}={} not regular",
                        bits(psi),
                        j + 1,
                        u8::from(c)
                    ));
                }
            }
        }
        None
    })
}

/// `E_j` and `A_k` on distinct variables of a regular function commute.
pub fn pairwise_suite(functions: &[BooleanFunction]) -> SuiteResult {
    run_suite("pairwise", &regular_only(functions), |psi| {
        let n = psi.n_vars();
        for j in 0..n {
            for k in (0..n).filter(|&k| k != j) {
                let e_first = psi.exists_elim(j).unwrap().forall_elim(k - usize::from(k > j)).unwrap();
                let a_first = psi.forall_elim(k).unwrap().exists_elim(j - usize::from(j > k)).unwrap();
                if e_first != a_first {
                    return Some(format!("{}: E{} and A{} disagree", bits(psi), j + 1, k + 1));
                }
            }
        }
        None
    })
}

/// `count` seeded random functions of `n` variables.
pub fn random_functions(seed: u64, n: usize, count: usize) -> Result<Vec<BooleanFunction>> {
    if n > 6 {
        return Err(Error::CapExceeded {
            what: "variables for random sampling",
            value: n,
            cap: 6,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = if n == 6 { u64::MAX } else { (1u64 << (1 << n)) - 1 };
    Ok((0..count)
        .map(|_| BooleanFunction::from_u64(n, rng.gen::<u64>() & mask))
        .collect())
}

pub const CUBE_SAMPLE: usize = 10_000;

/// The Boolean suites for all functions of `n ≤ 4` variables. For `n = 4`
/// the cube suite runs on every regular function plus a seeded sample.
pub fn boolean_suites(n: usize, seed: u64) -> Result<Vec<SuiteResult>> {
    if n == 0 || n > 4 {
        return Err(Error::CapExceeded {
            what: "variables for exhaustive verification",
            value: n,
            cap: 4,
        });
    }
    let all: Vec<BooleanFunction> = all_functions(n).collect();
    let cube_set = if n < 4 {
        all.clone()
    } else {
        let mut s = regular_only(&all);
        s.extend(random_functions(seed, n, CUBE_SAMPLE)?);
        s
    };
    let mut out = vec![commute_suite(&all), cube_suite(&cube_set)];
    if n == 3 {
        out.push(three_suite());
    }
    out.extend([zero_suite(&all), cor_commute_suite(&all), pairwise_suite(&all)]);
    Ok(out)
}

/// The Boolean suites on an explicit list of functions.
pub fn boolean_suites_for(functions: &[BooleanFunction]) -> Vec<SuiteResult> {
    let mut out = vec![commute_suite(functions)];
    if functions.iter().all(|f| (1..=4).contains(&f.n_vars())) {
        out.push(cube_suite(functions));
    }
    out.extend([
        zero_suite(functions),
        cor_commute_suite(functions),
        pairwise_suite(functions),
    ]);
    out
}

fn verdicts(u: &VoxelSet) -> Result<Vec<bool>> {
    Method::ALL
        .iter()
        .map(|&m| {
            let r = check(u, m)?;
            if let Some(w) = &r.witness {
                if !w.replay(u)? {
                    return Err(Error::InvalidArgument(format!("{m} witness {w} does not replay")));
                }
            }
            Ok(r.verdict)
        })
        .collect()
}

fn cells(u: &VoxelSet) -> String {
    let parts: Vec<String> = u
        .cells()
        .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", parts.join("; "))
}

/// All four checkers agree and every failure witness replays.
pub fn four_way_suite(sets: &[VoxelSet]) -> SuiteResult {
    run_suite("four-way", sets, |u| match verdicts(u) {
        Ok(v) if v.iter().all(|&x| x == v[0]) => None,
        Ok(v) => Some(format!("{}: definition/inductive/band/octant = {v:?}", cells(u))),
        Err(e) => Some(format!("{}: {e}", cells(u))),
    })
}

fn semi_monotone(u: &VoxelSet) -> bool {
    check_definition(u).map(|r| r.verdict).unwrap_or(false)
}

fn semi_monotone_sets(sets: &[VoxelSet]) -> Vec<VoxelSet> {
    sets.par_iter().filter(|u| semi_monotone(u)).cloned().collect()
}

/// Projections of semi-monotone sets are semi-monotone.
pub fn projection_suite(sets: &[VoxelSet]) -> SuiteResult {
    run_suite("projection", &semi_monotone_sets(sets), |u| {
        (0..u.dim()).find_map(|j| {
            let p = u.project(j).unwrap();
            (!semi_monotone(&p)).then(|| format!("{}: projection dropping x{}", cells(u), j + 1))
        })
    })
}

/// Cutting a semi-monotone set by one constraint, or by a pair `a < x_j < b`,
/// keeps it semi-monotone.
pub fn slice_suite(sets: &[VoxelSet]) -> SuiteResult {
    run_suite("slice", &semi_monotone_sets(sets), |u| {
        let bb = u.bounding_box()?;
        for (j, &(lo, hi)) in bb.iter().enumerate() {
            let ts = half_grid_values(lo, hi);
            for &t in &ts {
                for rel in Relation::ALL {
                    let c = ConeConstraint::new(j, rel, t);
                    if !semi_monotone(&u.apply(c)) {
                        return Some(format!("{}: cut {c}", cells(u)));
                    }
                }
                for &b in ts.iter().filter(|&&b| b < t) {
                    let band = u.apply(ConeConstraint::lt(j, t)).apply(ConeConstraint::gt(j, b));
                    if !semi_monotone(&band) {
                        return Some(format!("{}: band {b} < x{} < {t}", cells(u), j + 1));
                    }
                }
            }
        }
        None
    })
}

/// Non-empty semi-monotone sets are acyclic with a sphere as frontier.
pub fn acyclic_suite(sets: &[VoxelSet]) -> SuiteResult {
    let nonempty: Vec<VoxelSet> = semi_monotone_sets(sets).into_iter().filter(|u| !u.is_empty()).collect();
    run_suite("acyclic", &nonempty, |u| {
        let ev = regular_cell_evidence(u).ok()?;
        (!is_regular_cell_evidence(u.dim(), &ev)).then(|| format!("{}: U {} frontier {}", cells(u), ev.0, ev.1))
    })
}

/// All half-grid points outside the image of the projection along the
/// last axis, with their octant functions for the image.
fn outside_image_points(u: &VoxelSet, image: &VoxelSet) -> Vec<Vec<Half>> {
    let Some(bb) = u.bounding_box() else {
        return Vec::new();
    };
    let axes: Vec<Vec<Half>> = bb[..u.dim() - 1]
        .iter()
        .map(|&(lo, hi)| half_grid_values(lo, hi))
        .collect();
    let mut points: Vec<Vec<Half>> = vec![Vec::new()];
    for ax in &axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                ax.iter().map(move |&t| {
                    let mut q = p.clone();
                    q.push(t);
                    q
                })
            })
            .collect();
    }
    points.retain(|p| !image.contains_point(p));
    points
}

/// At a point outside the projection where the octant function of the
/// projection is `≡ 1`, some point above it carries a non-regular or
/// `≡ 1` octant function for the set itself.
pub fn constant_suite(sets: &[VoxelSet]) -> SuiteResult {
    let eligible: Vec<VoxelSet> = sets.iter().filter(|u| u.dim() >= 2 && !u.is_empty()).cloned().collect();
    run_suite("constant", &eligible, |u| {
        let last = u.dim() - 1;
        let image = u.project(last).unwrap();
        let bb = u.bounding_box().unwrap();
        let heights = half_grid_values(bb[last].0, bb[last].1);
        for p in outside_image_points(u, &image) {
            let psi = octant_function(&image, &p).unwrap();
            if psi.constant_value() != Some(true) {
                continue;
            }
            let found = heights.iter().any(|&h| {
                let mut q = p.clone();
                q.push(h);
                let phi = octant_function(u, &q).expect("outside the projection, hence outside U");
                phi.constant_value() == Some(true) || !is_regular(&phi)
            });
            if !found {
                let coords: Vec<String> = p.iter().map(Half::to_string).collect();
                return Some(format!("{}: no point above ({})", cells(u), coords.join(",")));
            }
        }
        None
    })
}

/// The voxel suites in a fixed order.
pub fn voxel_suites(sets: &[VoxelSet]) -> Vec<SuiteResult> {
    vec![
        four_way_suite(sets),
        projection_suite(sets),
        slice_suite(sets),
        acyclic_suite(sets),
        constant_suite(sets),
    ]
}

/// Exhaustive acyclic-link check on `Δ¹ … Δⁿ` and the six-vertex example.
pub fn acyclic_link_suites(n: usize) -> Result<Vec<SuiteResult>> {
    let mut out = Vec::new();
    for k in 1..=n {
        let r = verify_acyclic_link(k)?;
        let mut failures: Vec<String> = r.violations.iter().take(KEPT_FAILURES).map(|x| x.to_string()).collect();
        if r.families != r.expected_families {
            failures.insert(
                0,
                format!("enumerated {} families, expected {}", r.families, r.expected_families),
            );
        }
        out.push(SuiteResult {
            name: format!("acyclic-link-{k}"),
            checked: r.families as usize,
            failure_count: r.violations.len() + usize::from(r.families != r.expected_families),
            failures,
        });
    }
    Ok(out)
}

/// The six-vertex complex is acyclic, has no vertex with acyclic link, and
/// its links have girth 3 at even and 4 at odd vertices.
pub fn counterexample_suite() -> SuiteResult {
    let x = build_counterexample_5();
    let mut failures = Vec::new();
    if !x.is_acyclic() {
        failures.push("complex is not acyclic".to_string());
    }
    for v in 0..6 {
        let l = x.link(v).expect("every vertex is used");
        if l.is_acyclic() {
            failures.push(format!("link of {v} is acyclic"));
        }
        let want = if v % 2 == 0 { 3 } else { 4 };
        if l.girth() != Some(want) {
            failures.push(format!("link of {v} has girth {:?}, expected {want}", l.girth()));
        }
    }
    SuiteResult {
        name: "counterexample-5".into(),
        checked: 7,
        failure_count: failures.len(),
        failures,
    }
}
