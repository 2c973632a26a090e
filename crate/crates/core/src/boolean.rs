//! Boolean functions as dense truth tables, the elimination operators
//! `E_j` (exists) and `A_j` (for all), and the recursive regularity test.
//!
//! Variables are numbered from 0. Bit `j` of a table index is the value of
//! variable `j`, so index `i` encodes the point `(i & 1, i >> 1 & 1, ...)`.
//! Removing a variable shifts every higher variable down by one and keeps
//! the relative order of the rest.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::cubical::{CubicalComplex, GridFace};
use crate::error::{parse_err, Error, Result};

/// Largest supported number of variables (a table of 2^20 bits).
pub const MAX_VARS: usize = 20;

/// Largest arity for which exhaustive quantifier-word checks are run.
pub const MAX_ORDER_CHECK_VARS: usize = 6;

/// Largest arity for which the symmetry orbit is materialized.
pub const MAX_ORBIT_VARS: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    n_vars: usize,
    table: Vec<u64>,
}

fn words_for(n_vars: usize) -> usize {
    (1usize << n_vars).div_ceil(64)
}

impl BooleanFunction {
    pub fn from_fn<F: FnMut(usize) -> bool>(n_vars: usize, mut f: F) -> Result<Self> {
        if n_vars > MAX_VARS {
            return Err(Error::CapExceeded {
                what: "number of variables",
                value: n_vars,
                cap: MAX_VARS,
            });
        }
        let mut table = vec![0u64; words_for(n_vars)];
        for i in 0..1usize << n_vars {
            if f(i) {
                table[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(BooleanFunction { n_vars, table })
    }

    /// Builds a function of at most six variables from the low `2^n` bits of `bits`.
    pub fn from_u64(n_vars: usize, bits: u64) -> Self {
        assert!(n_vars <= 6, "from_u64 needs n_vars <= 6");
        let mask = if n_vars == 6 {
            u64::MAX
        } else {
            (1u64 << (1 << n_vars)) - 1
        };
        BooleanFunction {
            n_vars,
            table: vec![bits & mask],
        }
    }

    pub fn constant(n_vars: usize, value: bool) -> Result<Self> {
        Self::from_fn(n_vars, |_| value)
    }

    /// Conjunction of all variables.
    pub fn and(n_vars: usize) -> Result<Self> {
        let full = (1usize << n_vars) - 1;
        Self::from_fn(n_vars, |i| i == full)
    }

    pub fn or(n_vars: usize) -> Result<Self> {
        Self::from_fn(n_vars, |i| i != 0)
    }

    /// Parity of all variables.
    pub fn xor(n_vars: usize) -> Result<Self> {
        Self::from_fn(n_vars, |i| i.count_ones() % 2 == 1)
    }

    /// The projection `ξ ↦ ξ_var`.
    pub fn variable(n_vars: usize, var: usize) -> Result<Self> {
        if var >= n_vars {
            return Err(Error::VariableOutOfRange { index: var, n_vars });
        }
        Self::from_fn(n_vars, |i| i >> var & 1 == 1)
    }

    /// The function whose true set is exactly `points` (each point listed
    /// as its coordinate bits, variable 0 first).
    pub fn indicator(n_vars: usize, points: &[&[u8]]) -> Result<Self> {
        let mut idx = HashSet::new();
        for p in points {
            if p.len() != n_vars {
                return Err(Error::DimensionMismatch {
                    expected: n_vars,
                    found: p.len(),
                });
            }
            idx.insert(point_index(p));
        }
        Self::from_fn(n_vars, |i| idx.contains(&i))
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Number of table entries, `2^n_vars`.
    pub fn table_len(&self) -> usize {
        1 << self.n_vars
    }

    pub fn value(&self, index: usize) -> bool {
        self.table[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn eval(&self, point: &[u8]) -> bool {
        assert_eq!(point.len(), self.n_vars);
        self.value(point_index(point))
    }

    /// The table as an integer; only meaningful for at most six variables.
    pub fn as_u64(&self) -> u64 {
        assert!(self.n_vars <= 6);
        self.table[0]
    }

    pub fn count_ones(&self) -> usize {
        self.table.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn constant_value(&self) -> Option<bool> {
        match self.count_ones() {
            0 => Some(false),
            k if k == self.table_len() => Some(true),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn true_set(&self) -> Vec<usize> {
        (0..self.table_len()).filter(|&i| self.value(i)).collect()
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.n_vars, |i| !self.value(i)).expect("same arity")
    }

    fn check_var(&self, j: usize) -> Result<()> {
        if j >= self.n_vars {
            Err(Error::VariableOutOfRange {
                index: j,
                n_vars: self.n_vars,
            })
        } else {
            Ok(())
        }
    }

    /// `ψ_{j,c}`: pins variable `j` to `c`. Variables above `j` shift down.
    pub fn restrict(&self, j: usize, c: bool) -> Result<Self> {
        self.check_var(j)?;
        let low = (1usize << j) - 1;
        let bit = (c as usize) << j;
        Self::from_fn(self.n_vars - 1, |k| self.value((k >> j) << (j + 1) | bit | (k & low)))
    }

    /// `E_j(ψ) = ψ_{j,0} ∨ ψ_{j,1}`.
    pub fn exists_elim(&self, j: usize) -> Result<Self> {
        self.eliminate(Quantifier::Exists, j)
    }

    /// `A_j(ψ) = ψ_{j,0} ∧ ψ_{j,1}`.
    pub fn forall_elim(&self, j: usize) -> Result<Self> {
        self.eliminate(Quantifier::Forall, j)
    }

    pub fn eliminate(&self, q: Quantifier, j: usize) -> Result<Self> {
        self.check_var(j)?;
        let low = (1usize << j) - 1;
        Self::from_fn(self.n_vars - 1, |k| {
            let base = (k >> j) << (j + 1) | (k & low);
            let (a, b) = (self.value(base), self.value(base | 1 << j));
            match q {
                Quantifier::Exists => a || b,
                Quantifier::Forall => a && b,
            }
        })
    }

    /// `χ(ξ) = ψ(η)` where `η_{perm[j]} = ξ_j ⊕ flip_j`, optionally negated.
    pub fn transform(&self, perm: &[usize], flip: usize, negate: bool) -> Self {
        assert_eq!(perm.len(), self.n_vars);
        Self::from_fn(self.n_vars, |i| {
            let x = i ^ flip;
            let mut src = 0;
            for (j, &p) in perm.iter().enumerate() {
                src |= (x >> j & 1) << p;
            }
            self.value(src) ^ negate
        })
        .expect("same arity")
    }
}

fn point_index(p: &[u8]) -> usize {
    p.iter()
        .enumerate()
        .fold(0, |acc, (j, &b)| acc | ((b & 1) as usize) << j)
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(vars {}, ", self.n_vars)?;
        for i in 0..self.table_len() {
            write!(f, "{}", self.value(i) as u8)?;
        }
        write!(f, ")")
    }
}

/// Truth-table text format: `vars <n>` then the table as 0/1 in index order.
impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.n_vars)?;
        for i in 0..self.table_len() {
            write!(f, "{}", self.value(i) as u8)?;
        }
        Ok(())
    }
}

impl FromStr for BooleanFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "missing `vars` header"))?;
        let n: usize = header
            .strip_prefix("vars")
            .map(str::trim)
            .ok_or_else(|| parse_err(ln, "expected `vars <n>`"))?
            .parse()
            .map_err(|_| parse_err(ln, "bad variable count"))?;
        if n > MAX_VARS {
            return Err(Error::CapExceeded {
                what: "number of variables",
                value: n,
                cap: MAX_VARS,
            });
        }
        let mut bits = Vec::with_capacity(1 << n);
        let mut last = ln;
        for (ln, l) in lines {
            last = ln;
            for ch in l.chars() {
                match ch {
                    '0' => bits.push(false),
                    '1' => bits.push(true),
                    c if c.is_whitespace() => {}
                    c => return Err(parse_err(ln, format!("unexpected character {c:?}"))),
                }
            }
        }
        if bits.len() != 1 << n {
            return Err(parse_err(
                last,
                format!("expected {} table bits, found {}", 1usize << n, bits.len()),
            ));
        }
        BooleanFunction::from_fn(n, |i| bits[i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantifier {
    Exists,
    Forall,
}

impl Quantifier {
    pub fn other(self) -> Self {
        match self {
            Quantifier::Exists => Quantifier::Forall,
            Quantifier::Forall => Quantifier::Exists,
        }
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantifier::Exists => "E",
            Quantifier::Forall => "A",
        })
    }
}

/// A sequence of eliminations. Each index refers to a position among the
/// variables still present when that step runs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuantifierWord {
    pub ops: Vec<(Quantifier, usize)>,
}

impl QuantifierWord {
    pub fn new(ops: Vec<(Quantifier, usize)>) -> Self {
        QuantifierWord { ops }
    }

    pub fn apply(&self, psi: &BooleanFunction) -> Result<BooleanFunction> {
        if self.ops.len() > psi.n_vars() {
            return Err(Error::InvalidArgument(format!(
                "word of length {} applied to a function of {} variables",
                self.ops.len(),
                psi.n_vars()
            )));
        }
        self.ops.iter().try_fold(psi.clone(), |f, &(q, j)| f.eliminate(q, j))
    }
}

impl fmt::Display for QuantifierWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, j) in &self.ops {
            write!(f, "{q}{j}")?;
        }
        Ok(())
    }
}

fn square_is_regular(f00: bool, f10: bool, f01: bool, f11: bool) -> bool {
    // true set {(1,0),(0,1)} or {(0,0),(1,1)}
    !(f00 == f11 && f10 == f01 && f00 != f10)
}

/// (R1): every restriction to a Boolean square is regular.
fn squares_regular(psi: &BooleanFunction) -> bool {
    let n = psi.n_vars();
    for a in 0..n {
        for b in a + 1..n {
            let (ma, mb) = (1usize << a, 1usize << b);
            for base in 0..psi.table_len() {
                if base & (ma | mb) != 0 {
                    continue;
                }
                if !square_is_regular(
                    psi.value(base),
                    psi.value(base | ma),
                    psi.value(base | mb),
                    psi.value(base | ma | mb),
                ) {
                    return false;
                }
            }
        }
    }
    true
}

/// The recursive regularity test exactly as defined, without any caching.
pub fn is_regular_unmemoized(psi: &BooleanFunction) -> bool {
    let n = psi.n_vars();
    if n <= 2 {
        return squares_regular(psi);
    }
    squares_regular(psi)
        && is_regular_unmemoized(&psi.exists_elim(n - 1).expect("n >= 1"))
        && is_regular_unmemoized(&psi.forall_elim(n - 1).expect("n >= 1"))
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum MemoKey {
    Canonical(usize, u64),
    Raw(BooleanFunction),
}

thread_local! {
    static REGULAR_MEMO: RefCell<HashMap<MemoKey, bool>> = RefCell::new(HashMap::new());
}

fn memo_key(psi: &BooleanFunction) -> MemoKey {
    if psi.n_vars() <= MAX_ORBIT_VARS {
        MemoKey::Canonical(psi.n_vars(), canonical_u64(psi))
    } else {
        MemoKey::Raw(psi.clone())
    }
}

/// Regularity with a per-thread memo keyed by the canonical orbit
/// representative (arity ≤ 6) or the raw table (larger arity).
pub fn is_regular(psi: &BooleanFunction) -> bool {
    let n = psi.n_vars();
    if n <= 2 {
        return squares_regular(psi);
    }
    if !squares_regular(psi) {
        return false;
    }
    let key = memo_key(psi);
    if let Some(v) = REGULAR_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let v =
        is_regular(&psi.exists_elim(n - 1).expect("n >= 1")) && is_regular(&psi.forall_elim(n - 1).expect("n >= 1"));
    REGULAR_MEMO.with(|m| m.borrow_mut().insert(key, v));
    v
}

/// Decides whether every sequence of `E_j`/`A_k` eliminations gives a
/// result independent of the order of its steps.
///
/// Each reachable partial elimination result is checked for commutation
/// of every adjacent `E`/`A` pair on distinct surviving variables; since
/// adjacent transpositions generate all reorderings this is equivalent to
/// comparing all orderings. Surviving variables are tracked by their
/// original numbers.
pub fn is_order_independent(psi: &BooleanFunction) -> Result<bool> {
    let n = psi.n_vars();
    if n > MAX_ORDER_CHECK_VARS {
        return Err(Error::CapExceeded {
            what: "order-independence arity",
            value: n,
            cap: MAX_ORDER_CHECK_VARS,
        });
    }
    let mut seen: HashSet<(u32, BooleanFunction)> = HashSet::new();
    let mut stack = vec![((1u32 << n) - 1, psi.clone())];
    while let Some((alive, f)) = stack.pop() {
        if !seen.insert((alive, f.clone())) {
            continue;
        }
        let m = f.n_vars();
        for p in 0..m {
            for q in 0..m {
                if p == q {
                    continue;
                }
                // E on original position p, A on q, in both orders
                let q_after_p = if q > p { q - 1 } else { q };
                let p_after_q = if p > q { p - 1 } else { p };
                let first = f.exists_elim(p)?.forall_elim(q_after_p)?;
                let second = f.forall_elim(q)?.exists_elim(p_after_q)?;
                if first != second {
                    return Ok(false);
                }
            }
        }
        for p in 0..m {
            let orig = nth_set_bit(alive, p);
            for qk in [Quantifier::Exists, Quantifier::Forall] {
                stack.push((alive & !(1 << orig), f.eliminate(qk, p)?));
            }
        }
    }
    Ok(true)
}

fn nth_set_bit(mut mask: u32, n: usize) -> u32 {
    for _ in 0..n {
        mask &= mask - 1;
    }
    mask.trailing_zeros()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Index maps `dst -> src` for every (permutation, input flip) pair.
fn index_maps(n: usize) -> Vec<Vec<u8>> {
    let mut maps = Vec::new();
    for perm in permutations(n) {
        for flip in 0..1usize << n {
            maps.push(
                (0..1usize << n)
                    .map(|i| {
                        let x = i ^ flip;
                        perm.iter().enumerate().fold(0usize, |s, (j, &p)| s | (x >> j & 1) << p) as u8
                    })
                    .collect(),
            );
        }
    }
    maps
}

fn apply_map(bits: u64, map: &[u8]) -> u64 {
    map.iter()
        .enumerate()
        .fold(0, |acc, (i, &s)| acc | (bits >> s & 1) << i)
}

fn full_mask(n: usize) -> u64 {
    if n == 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// Canonical representatives for every table of arity ≤ 4, computed by
/// sweeping each orbit once.
fn small_canonical_tables() -> &'static [Vec<u16>; 5] {
    static TABLES: OnceLock<[Vec<u16>; 5]> = OnceLock::new();
    TABLES.get_or_init(|| {
        std::array::from_fn(|n| {
            let size = 1usize << (1 << n);
            let maps = index_maps(n);
            let full = full_mask(n);
            let mut canon = vec![u16::MAX; size];
            let mut done = vec![false; size];
            for t in 0..size {
                if done[t] {
                    continue;
                }
                let mut orbit = Vec::new();
                for m in &maps {
                    let x = apply_map(t as u64, m);
                    orbit.push(x);
                    orbit.push(!x & full);
                }
                let min = *orbit.iter().min().unwrap() as u16;
                for x in orbit {
                    canon[x as usize] = min;
                    done[x as usize] = true;
                }
            }
            canon
        })
    })
}

/// Smallest table in the orbit of `psi` under variable permutations,
/// input complementations and output complementation.
pub fn canonical_u64(psi: &BooleanFunction) -> u64 {
    let n = psi.n_vars();
    assert!(n <= MAX_ORBIT_VARS);
    if n <= 4 {
        return small_canonical_tables()[n][psi.as_u64() as usize] as u64;
    }
    let bits = psi.as_u64();
    let full = full_mask(n);
    index_maps(n)
        .iter()
        .map(|m| {
            let x = apply_map(bits, m);
            x.min(!x & full)
        })
        .min()
        .unwrap()
}

/// The orbit of `psi` under variable permutations, per-variable
/// complementation and global complementation.
pub fn symmetry_orbit(psi: &BooleanFunction) -> Result<BTreeSet<BooleanFunction>> {
    let n = psi.n_vars();
    if n > MAX_ORBIT_VARS {
        return Err(Error::CapExceeded {
            what: "orbit arity",
            value: n,
            cap: MAX_ORBIT_VARS,
        });
    }
    let mut out = BTreeSet::new();
    for perm in permutations(n) {
        for flip in 0..1usize << n {
            for negate in [false, true] {
                out.insert(psi.transform(&perm, flip, negate));
            }
        }
    }
    Ok(out)
}

/// The union of the closed unit cubes of `[-1,1]^n` whose points `ξ` satisfy
/// `ψ(ξ) = 1`; the cube for `ξ` is `∏_j [ξ_j - 1, ξ_j]`.
pub fn cube_union(psi: &BooleanFunction) -> CubicalComplex {
    let n = psi.n_vars();
    let tops = psi.true_set().into_iter().map(|i| {
        let lo: Vec<i32> = (0..n).map(|j| (i >> j & 1) as i32 - 1).collect();
        GridFace::cube(&lo)
    });
    CubicalComplex::from_top_faces(n, tops).expect("cubes share the ambient dimension")
}

/// Every function of `n` variables, in table order.
pub fn all_functions(n: usize) -> impl Iterator<Item = BooleanFunction> {
    assert!(n <= 5, "exhaustive enumeration is limited to 5 variables");
    let count = 1u64 << (1 << n);
    (0..count).map(move |t| BooleanFunction::from_u64(n, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: usize, bits: &str) -> BooleanFunction {
        format!("vars {n}\n{bits}").parse().unwrap()
    }

    #[test]
    fn restrict_examples() {
        let and2 = BooleanFunction::and(2).unwrap();
        assert_eq!(
            and2.restrict(0, false).unwrap(),
            BooleanFunction::constant(1, false).unwrap()
        );
        assert_eq!(
            and2.restrict(0, true).unwrap(),
            BooleanFunction::variable(1, 0).unwrap()
        );
        // XOR3 with ξ_2 := 1 is XNOR in the remaining two variables
        let xnor = BooleanFunction::xor(2).unwrap().complement();
        assert_eq!(BooleanFunction::xor(3).unwrap().restrict(1, true).unwrap(), xnor);
        assert!(and2.restrict(2, true).is_err());
    }

    #[test]
    fn elimination_examples() {
        let and2 = BooleanFunction::and(2).unwrap();
        let xor2 = BooleanFunction::xor(2).unwrap();
        assert_eq!(and2.exists_elim(0).unwrap(), BooleanFunction::variable(1, 0).unwrap());
        assert_eq!(
            xor2.exists_elim(0).unwrap(),
            BooleanFunction::constant(1, true).unwrap()
        );
        assert_eq!(
            and2.forall_elim(0).unwrap(),
            BooleanFunction::constant(1, false).unwrap()
        );
        assert_eq!(
            xor2.forall_elim(1).unwrap(),
            BooleanFunction::constant(1, false).unwrap()
        );
        for n in 1..4 {
            for j in 0..n {
                let zero = BooleanFunction::constant(n, false).unwrap();
                let one = BooleanFunction::constant(n, true).unwrap();
                assert_eq!(zero.exists_elim(j).unwrap().constant_value(), Some(false));
                assert_eq!(one.forall_elim(j).unwrap().constant_value(), Some(true));
            }
        }
        assert!(xor2.exists_elim(5).is_err());
    }

    #[test]
    fn elimination_of_last_variable_gives_nullary_constant() {
        let id = BooleanFunction::variable(1, 0).unwrap();
        let e = id.exists_elim(0).unwrap();
        assert_eq!((e.n_vars(), e.constant_value()), (0, Some(true)));
        let a = id.forall_elim(0).unwrap();
        assert_eq!((a.n_vars(), a.constant_value()), (0, Some(false)));
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular(&BooleanFunction::variable(1, 0).unwrap()));
        assert!(!is_regular(&BooleanFunction::xor(2).unwrap()));
        assert!(!is_regular(&f(2, "1001")));
        assert!(is_regular(&BooleanFunction::indicator(3, &[&[0, 0, 0]]).unwrap()));
        assert!(is_regular(&BooleanFunction::constant(0, true).unwrap()));
    }

    #[test]
    fn two_variable_definition_matches_commutation_form() {
        // the alternative n = 2 formulation: E1(A2 ψ) = A2(E1 ψ) or A1(E2 ψ) = E2(A1 ψ)
        for psi in all_functions(2) {
            let c1 = psi.forall_elim(1).unwrap().exists_elim(0).unwrap()
                == psi.exists_elim(0).unwrap().forall_elim(0).unwrap();
            let c2 = psi.exists_elim(1).unwrap().forall_elim(0).unwrap()
                == psi.forall_elim(0).unwrap().exists_elim(0).unwrap();
            assert_eq!(is_regular(&psi), c1 || c2, "{psi:?}");
        }
    }

    #[test]
    fn order_independence_examples() {
        assert!(!is_order_independent(&BooleanFunction::xor(2).unwrap()).unwrap());
        assert!(is_order_independent(&BooleanFunction::constant(3, true).unwrap()).unwrap());
        assert!(is_order_independent(&BooleanFunction::and(3).unwrap()).unwrap());
        assert!(is_order_independent(&BooleanFunction::constant(7, true).unwrap()).is_err());
    }

    #[test]
    fn xor_word_orders_disagree() {
        let xor2 = BooleanFunction::xor(2).unwrap();
        // E1(A2 ψ) = 0, A2(E1 ψ) = 1 with one-based names
        let ea = QuantifierWord::new(vec![(Quantifier::Forall, 1), (Quantifier::Exists, 0)]);
        let ae = QuantifierWord::new(vec![(Quantifier::Exists, 0), (Quantifier::Forall, 0)]);
        assert_eq!(ea.apply(&xor2).unwrap().constant_value(), Some(false));
        assert_eq!(ae.apply(&xor2).unwrap().constant_value(), Some(true));
        assert_eq!(ea.to_string(), "A1E0");
    }

    #[test]
    fn and3_all_orderings_agree_by_enumeration() {
        // every kind assignment, every ordering: compare constant results
        let and3 = BooleanFunction::and(3).unwrap();
        for kinds in 0..8u32 {
            let mut results = HashSet::new();
            for perm in permutations(3) {
                let mut f = and3.clone();
                let mut alive: Vec<usize> = (0..3).collect();
                for &v in &perm {
                    let pos = alive.iter().position(|&a| a == v).unwrap();
                    let q = if kinds >> v & 1 == 1 {
                        Quantifier::Forall
                    } else {
                        Quantifier::Exists
                    };
                    f = f.eliminate(q, pos).unwrap();
                    alive.remove(pos);
                }
                results.insert(f.constant_value().unwrap());
            }
            assert_eq!(results.len(), 1);
        }
    }

    #[test]
    fn cube_union_examples() {
        let c = cube_union(&BooleanFunction::indicator(2, &[&[1, 1]]).unwrap());
        assert_eq!(c.count_by_dim(), vec![4, 4, 1]);
        let diag = cube_union(&BooleanFunction::indicator(2, &[&[0, 0], &[1, 1]]).unwrap());
        assert_eq!(diag.count_by_dim(), vec![7, 8, 2]);
        let full = cube_union(&BooleanFunction::constant(2, true).unwrap());
        assert_eq!(full.count_by_dim(), vec![9, 12, 4]);
    }

    #[test]
    fn orbit_examples() {
        let zero = BooleanFunction::constant(2, false).unwrap();
        let orbit = symmetry_orbit(&zero).unwrap();
        assert_eq!(orbit.len(), 2);
        let id = BooleanFunction::variable(1, 0).unwrap();
        let orbit = symmetry_orbit(&id).unwrap();
        assert_eq!(orbit.into_iter().collect::<Vec<_>>(), vec![f(1, "10"), f(1, "01")]);
        assert_eq!(symmetry_orbit(&BooleanFunction::and(2).unwrap()).unwrap().len(), 8);
    }

    #[test]
    fn canonical_form_is_orbit_minimum() {
        for n in 0..=3 {
            for psi in all_functions(n) {
                let orbit = symmetry_orbit(&psi).unwrap();
                let min = orbit.iter().map(|g| g.as_u64()).min().unwrap();
                assert_eq!(canonical_u64(&psi), min);
            }
        }
        let psi = BooleanFunction::from_u64(5, 0x1234_5678);
        let orbit_min = symmetry_orbit(&psi).unwrap().iter().map(|g| g.as_u64()).min().unwrap();
        assert_eq!(canonical_u64(&psi), orbit_min);
    }

    #[test]
    fn memoized_and_direct_regularity_agree() {
        for n in 0..=4 {
            for psi in all_functions(n) {
                assert_eq!(is_regular(&psi), is_regular_unmemoized(&psi));
            }
        }
    }

    #[test]
    fn table_text_roundtrip_and_errors() {
        let psi = BooleanFunction::xor(3).unwrap();
        let text = psi.to_string();
        assert_eq!(text, "vars 3\n01101001");
        assert_eq!(text.parse::<BooleanFunction>().unwrap(), psi);
        assert!("vars 2\n010".parse::<BooleanFunction>().is_err());
        assert!("vars 1\n0x".parse::<BooleanFunction>().is_err());
        assert!("bits 1\n01".parse::<BooleanFunction>().is_err());
    }
}
