//! The lattice of relations `L` on the configuration `A`, the series
//! `F_{v0}(λ)` and its logarithmic companions `G_i(λ)`, and coefficient-level
//! checks that box and Euler operators annihilate them.
//!
//! Series here are Laurent series in `λ_1, …, λ_N` supported on a coset
//! `base + L`. Elements of `L` are parametrized by `p ∈ Z^r`:
//! `l(p) = (−p, −C(p), D(p), p)`. Truncation keeps `p` in `[0, P]^r`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{harmonic_unchecked, LinearFormSystem};
use crate::geometry::{build_configuration, PointConfiguration};
use crate::report::rat_text;
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeElement {
    pub p: Vec<i64>,
    pub l: Vec<i64>,
}

impl LatticeElement {
    /// Componentwise `max(l, 0)`.
    pub fn positive_part(&self) -> Vec<i64> {
        self.l.iter().map(|&x| x.max(0)).collect()
    }

    /// Componentwise `max(−l, 0)`.
    pub fn negative_part(&self) -> Vec<i64> {
        self.l.iter().map(|&x| (-x).max(0)).collect()
    }
}

fn relation_sum(config: &PointConfiguration, l: &[i64]) -> Vec<i64> {
    let mut acc = vec![0i64; config.dim()];
    for (li, a) in l.iter().zip(config.points()) {
        for (x, y) in acc.iter_mut().zip(a) {
            *x += li * y;
        }
    }
    acc
}

/// `l(p)`; panics if the result is not a relation on `A`.
pub fn lattice_element(config: &PointConfiguration, p: &[i64]) -> LatticeElement {
    let (r, j, k) = (config.r(), config.j_count(), config.k_count());
    assert_eq!(p.len(), r, "lattice parameter width");
    let n = config.dim();
    let image = |c: usize| -> i64 { (0..r).map(|s| config.points()[n + s][c] * p[s]).sum() };
    let mut l = Vec::with_capacity(n + r);
    l.extend(p.iter().map(|x| -x));
    l.extend((0..j).map(|jj| -image(r + jj)));
    // a_{n+s} stores −d_ks, so −image is D_k(p)
    l.extend((0..k).map(|kk| -image(r + j + kk)));
    l.extend_from_slice(p);
    assert!(relation_sum(config, &l).iter().all(|&x| x == 0), "l(p) is not a relation");
    LatticeElement { p: p.to_vec(), l }
}

/// `[z]_k`: 1 for `k = 0`, `1/((z+1)⋯(z+k))` for `k > 0`,
/// `z(z−1)⋯(z+k+1)` for `k < 0`.
pub fn bracket(z: i64, k: i64) -> Result<BigRational> {
    let mut acc = BigInt::one();
    if k > 0 {
        for t in 1..=k {
            let f = z + t;
            if f == 0 {
                return Err(Error::DivisionByZero { z, k });
            }
            acc *= f;
        }
        Ok(BigRational::new(BigInt::one(), acc))
    } else {
        for t in 0..(-k) {
            acc *= z - t;
        }
        Ok(BigRational::from_integer(acc))
    }
}

/// `Π_i [z_i]_{k_i}`.
pub fn bracket_vec(z: &[i64], k: &[i64]) -> Result<BigRational> {
    z.iter().zip(k).try_fold(BigRational::one(), |acc, (&zi, &ki)| Ok(acc * bracket(zi, ki)?))
}

/// Falling factorial `Π_i w_i (w_i − 1) ⋯ (w_i − k_i + 1)` for `k ≥ 0`.
pub fn falling_factorial(w: &[i64], k: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for (&wi, &ki) in w.iter().zip(k) {
        debug_assert!(ki >= 0);
        for t in 0..ki {
            acc *= wi - t;
        }
    }
    acc
}

/// 1-based indices of negative entries.
pub fn nsupp(w: &[i64]) -> BTreeSet<usize> {
    (1..=w.len()).filter(|&i| w[i - 1] < 0).collect()
}

/// [`nsupp`] with index `i` (1-based) left out.
pub fn ihat_nsupp(w: &[i64], i: usize) -> BTreeSet<usize> {
    let mut s = nsupp(w);
    s.remove(&i);
    s
}

/// `v0 = (−1^{r+J}, 0^{K+r})`.
pub fn v0(config: &PointConfiguration) -> Vec<i64> {
    let mut v = vec![-1; config.r() + config.j_count()];
    v.resize(config.dim() + config.r(), 0);
    v
}

/// `β0 = Σ_{i ≤ r+J} (−1)·a_i = (−1^{r+J}, 0^K)`.
pub fn beta0(config: &PointConfiguration) -> Vec<i64> {
    let mut b = vec![-1; config.r() + config.j_count()];
    b.resize(config.dim(), 0);
    b
}

fn lattice_box(r: usize, lo: i64, hi: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (hi - lo + 1).max(0) as u64;
    let total = if width == 0 { 0 } else { width.pow(r as u32) };
    (0..total).map(move |mut idx| {
        let mut p = vec![0i64; r];
        for slot in p.iter_mut().rev() {
            *slot = lo + (idx % width) as i64;
            idx /= width;
        }
        p
    })
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportVerdict {
    pub minimal_within_box: bool,
    pub box_bound: i64,
    /// `p` with `nsupp(w + l(p))` a proper subset of `nsupp(w)`.
    pub counterexample: Option<Vec<i64>>,
}

/// Searches `p ∈ [−P, P]^r` for `l(p)` shrinking the negative support of `w`
/// (or its `î`-negative support when `ihat` is given).
pub fn minimal_negative_support_check(
    config: &PointConfiguration,
    w: &[i64],
    box_bound: i64,
    ihat: Option<usize>,
) -> Result<SupportVerdict> {
    let big_n = config.points().len();
    if w.len() != big_n {
        return Err(Error::DimensionMismatch { expected: big_n, found: w.len() });
    }
    if let Some(i) = ihat {
        if i == 0 || i > big_n {
            return Err(Error::IndexOutOfRange { what: "omitted index", index: i, max: big_n });
        }
    }
    let support = |x: &[i64]| match ihat {
        Some(i) => ihat_nsupp(x, i),
        None => nsupp(x),
    };
    let base = support(w);
    let counterexample = lattice_box(config.r(), -box_bound, box_bound).find(|p| {
        let shifted = add(w, &lattice_element(config, p).l);
        let s = support(&shifted);
        s.len() < base.len() && s.is_subset(&base)
    });
    Ok(SupportVerdict { minimal_within_box: counterexample.is_none(), box_bound, counterexample })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeMatch {
    pub equal_within_box: bool,
    pub box_bound: i64,
    /// `p` in exactly one of the two sets.
    pub mismatch: Option<Vec<i64>>,
}

/// Compares `{l : î-nsupp(v0 + l) = î-nsupp(v0)}` with
/// `{l : nsupp(v0 + l) = nsupp(v0)}` over `p ∈ [−P, P]^r`.
pub fn ihat_lattice_check(config: &PointConfiguration, i: usize, box_bound: i64) -> Result<LatticeMatch> {
    let big_n = config.points().len();
    if i == 0 || i > big_n {
        return Err(Error::IndexOutOfRange { what: "omitted index", index: i, max: big_n });
    }
    let v = v0(config);
    let (full, hat) = (nsupp(&v), ihat_nsupp(&v, i));
    let mismatch = lattice_box(config.r(), -box_bound, box_bound).find(|p| {
        let w = add(&v, &lattice_element(config, p).l);
        (nsupp(&w) == full) != (ihat_nsupp(&w, i) == hat)
    });
    Ok(LatticeMatch { equal_within_box: mismatch.is_none(), box_bound, mismatch })
}

/// A truncated Laurent series in `λ_1, …, λ_N` supported on `base + L`,
/// with Euler parameter `beta`. Terms are keyed by the full exponent `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGSeries {
    config: PointConfiguration,
    beta: Vec<i64>,
    base: Vec<i64>,
    bound: i64,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl HGSeries {
    pub fn empty(config: &PointConfiguration, beta: Vec<i64>, base: Vec<i64>, bound: i64) -> Self {
        HGSeries { config: config.clone(), beta, base, bound, terms: BTreeMap::new() }
    }

    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }
    pub fn beta(&self) -> &[i64] {
        &self.beta
    }
    pub fn base(&self) -> &[i64] {
        &self.base
    }
    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigRational)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[i64]) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Stores `c` at `w`, removing the term when `c = 0`.
    pub fn set(&mut self, w: Vec<i64>, c: BigRational) {
        if c.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, c);
        }
    }

    fn accumulate(&mut self, w: Vec<i64>, c: BigRational) {
        let sum = self.coeff(&w) + c;
        self.set(w, sum);
    }

    /// Lattice parameter of an exponent on the supporting coset.
    pub fn p_of(&self, w: &[i64]) -> Vec<i64> {
        let n = self.config.dim();
        sub(&w[n..], &self.base[n..])
    }

    /// The exponent `base + l(p)`.
    pub fn exponent_of(&self, p: &[i64]) -> Vec<i64> {
        add(&self.base, &lattice_element(&self.config, p).l)
    }

    /// Is the coefficient at `w` determined by the truncation? Exponents
    /// with some `p_s > P` are not; those with some `p_s < 0` are known zeros.
    pub fn covers(&self, w: &[i64]) -> bool {
        self.p_of(w).iter().all(|&x| x <= self.bound)
    }

    /// `∂/∂λ_j` (1-based `j`): `λ^w ↦ w_j λ^{w − e_j}`.
    pub fn derivative(&self, j: usize) -> HGSeries {
        let mut out = self.shifted(j, false);
        for (w, c) in &self.terms {
            let mut u = w.clone();
            u[j - 1] -= 1;
            out.set(u, c * BigInt::from(w[j - 1]));
        }
        out
    }

    /// Multiplication by `λ_j^{−1}`, or an empty series with the same shift.
    fn shifted(&self, j: usize, keep_terms: bool) -> HGSeries {
        let mut base = self.base.clone();
        base[j - 1] -= 1;
        let beta = sub(&self.beta, &self.config.points()[j - 1]);
        let mut out = HGSeries::empty(&self.config, beta, base, self.bound);
        if keep_terms {
            for (w, c) in &self.terms {
                let mut u = w.clone();
                u[j - 1] -= 1;
                out.set(u, c.clone());
            }
        }
        out
    }

    fn add_assign(&mut self, other: &HGSeries) {
        debug_assert_eq!(self.base, other.base);
        for (w, c) in &other.terms {
            self.accumulate(w.clone(), c.clone());
        }
    }

    /// One line per term, `p_1 … p_r : n/d`, graded-lex in `p`.
    pub fn to_canonical_text(&self) -> String {
        let mut rows: Vec<(Vec<i64>, &BigRational)> = self.terms.iter().map(|(w, c)| (self.p_of(w), c)).collect();
        rows.sort_by(|(a, _), (b, _)| (a.iter().sum::<i64>(), a).cmp(&(b.iter().sum::<i64>(), b)));
        let mut out = String::new();
        for (p, c) in rows {
            let exps: Vec<String> = p.iter().map(i64::to_string).collect();
            out.push_str(&format!("{} : {}\n", exps.join(" "), rat_text(c)));
        }
        out
    }
}

/// `F_{v0}(λ) = Σ_{p ∈ [0,P]^r} [v0]_{l(p)} λ^{v0 + l(p)}`.
pub fn build_f_v0(sys: &LinearFormSystem, bound: i64) -> Result<HGSeries> {
    let config = build_configuration(sys)?;
    let v = v0(&config);
    let mut f = HGSeries::empty(&config, beta0(&config), v.clone(), bound);
    for p in lattice_box(sys.r(), 0, bound) {
        let l = lattice_element(&config, &p).l;
        let c = bracket_vec(&v, &l)?;
        f.set(add(&v, &l), c);
    }
    Ok(f)
}

/// `G_i` for `i = r+1, …, n`: the `F_{v0}` coefficients times `−H_{C_j(p)}`
/// (`i = r+j`) or `−H_{D_k(p)}` (`i = r+J+k`), over `p` where that form is
/// nonzero.
pub fn build_g_i(sys: &LinearFormSystem, i: usize, bound: i64) -> Result<HGSeries> {
    let (r, n) = (sys.r(), sys.r() + sys.j_count() + sys.k_count());
    if i <= r || i > n {
        return Err(Error::LogIndexOutOfRange { index: i, min: r + 1, max: n });
    }
    let config = build_configuration(sys)?;
    let v = v0(&config);
    let mut g = HGSeries::empty(&config, beta0(&config), v.clone(), bound);
    for p in lattice_box(r, 0, bound) {
        let l = lattice_element(&config, &p).l;
        // |l_i| is C_j(p) or D_k(p)
        let h = l[i - 1].unsigned_abs();
        if h == 0 {
            continue;
        }
        let c = -bracket_vec(&v, &l)? * harmonic_unchecked(h);
        g.set(add(&v, &l), c);
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerFailure {
    /// 1-based row of `A`.
    pub row: usize,
    pub exponent: Vec<i64>,
    pub value: i64,
    pub expected: i64,
}

/// `Σ_j a_ij w_j = β_i` for every stored exponent and every row `i`.
pub fn euler_check(series: &HGSeries) -> std::result::Result<usize, EulerFailure> {
    let a = series.config.points();
    for w in series.terms.keys() {
        for (row, &expected) in series.beta.iter().enumerate() {
            let value: i64 = a.iter().zip(w).map(|(col, wj)| col[row] * wj).sum();
            if value != expected {
                return Err(EulerFailure { row: row + 1, exponent: w.clone(), value, expected });
            }
        }
    }
    Ok(series.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    /// Exponent at which the two sides were compared.
    pub exponent: Vec<i64>,
    #[serde(serialize_with = "crate::report::ser_rat")]
    pub lhs: BigRational,
    #[serde(serialize_with = "crate::report::ser_rat")]
    pub rhs: BigRational,
    /// Which component disagreed: `plain` or `log`.
    pub part: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxVerdict {
    pub passed: bool,
    pub checked: usize,
    pub boundary_skipped: usize,
    pub failure: Option<IdentityFailure>,
}

impl BoxVerdict {
    fn new() -> Self {
        BoxVerdict { passed: true, checked: 0, boundary_skipped: 0, failure: None }
    }

    fn merge(&mut self, other: BoxVerdict) {
        self.checked += other.checked;
        self.boundary_skipped += other.boundary_skipped;
        if self.passed && !other.passed {
            self.passed = false;
            self.failure = other.failure;
        }
    }
}

/// Exponents `u` at which `∂^{l+}` or `∂^{l−}` of the series can be nonzero.
fn probe_points(series: &HGSeries, lp: &[i64], ln: &[i64]) -> BTreeSet<Vec<i64>> {
    series.terms.keys().flat_map(|w| [sub(w, lp), sub(w, ln)]).collect()
}

/// `□_l` annihilates the series: `c(u+l+)·ff(u+l+, l+) = c(u+l−)·ff(u+l−, l−)`
/// wherever the truncation determines both sides.
pub fn box_check(series: &HGSeries, l: &LatticeElement) -> BoxVerdict {
    let (lp, ln) = (l.positive_part(), l.negative_part());
    let mut verdict = BoxVerdict::new();
    for u in probe_points(series, &lp, &ln) {
        let (w1, w2) = (add(&u, &lp), add(&u, &ln));
        if !series.covers(&w1) || !series.covers(&w2) {
            verdict.boundary_skipped += 1;
            continue;
        }
        verdict.checked += 1;
        let lhs = series.coeff(&w1) * falling_factorial(&w1, &lp);
        let rhs = series.coeff(&w2) * falling_factorial(&w2, &ln);
        if lhs != rhs {
            verdict.passed = false;
            verdict.failure = Some(IdentityFailure { exponent: u, lhs, rhs, part: "plain" });
            return verdict;
        }
    }
    verdict
}

/// `P · log λ_i + Q` with both parts on the same coset and parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSeries {
    pub log_index: usize,
    pub p_part: HGSeries,
    pub q_part: HGSeries,
}

impl LogSeries {
    pub fn new(log_index: usize, p_part: HGSeries, q_part: HGSeries) -> Result<Self> {
        if p_part.beta != q_part.beta || p_part.base != q_part.base {
            return Err(Error::SeriesMismatch("log and plain parts live on different cosets".into()));
        }
        if log_index == 0 || log_index > p_part.base.len() {
            return Err(Error::IndexOutOfRange { what: "log index", index: log_index, max: p_part.base.len() });
        }
        Ok(LogSeries { log_index, p_part, q_part })
    }

    /// `∂_j (P log λ_i + Q) = (∂_j P) log λ_i + [j = i] P λ_i^{−1} + ∂_j Q`.
    pub fn derivative(&self, j: usize) -> LogSeries {
        let p_part = self.p_part.derivative(j);
        let mut q_part = self.q_part.derivative(j);
        if j == self.log_index {
            q_part.add_assign(&self.p_part.shifted(j, true));
        }
        LogSeries { log_index: self.log_index, p_part, q_part }
    }

    /// `Π_j ∂_j^{k_j}` by repeated first derivatives.
    pub fn apply(&self, k: &[i64]) -> LogSeries {
        let mut cur = self.clone();
        for (j, &times) in k.iter().enumerate() {
            for _ in 0..times {
                cur = cur.derivative(j + 1);
            }
        }
        cur
    }
}

/// `□_l (P log λ_i + Q) = 0` at every exponent the truncation determines.
pub fn log_box_check(series: &LogSeries, l: &LatticeElement) -> BoxVerdict {
    let (lp, ln) = (l.positive_part(), l.negative_part());
    let left = series.apply(&lp);
    let right = series.apply(&ln);
    let mut probes = probe_points(&series.p_part, &lp, &ln);
    probes.extend(probe_points(&series.q_part, &lp, &ln));
    let mut verdict = BoxVerdict::new();
    let covers = |w: &[i64]| series.p_part.covers(w);
    for u in probes {
        if !covers(&add(&u, &lp)) || !covers(&add(&u, &ln)) {
            verdict.boundary_skipped += 1;
            continue;
        }
        verdict.checked += 1;
        for (part, a, b) in [("log", &left.p_part, &right.p_part), ("plain", &left.q_part, &right.q_part)] {
            let (lhs, rhs) = (a.coeff(&u), b.coeff(&u));
            if lhs != rhs {
                verdict.passed = false;
                verdict.failure = Some(IdentityFailure { exponent: u, lhs, rhs, part });
                return verdict;
            }
        }
    }
    verdict
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiVerdict {
    pub log_index: usize,
    pub passed: bool,
    pub euler_ok: bool,
    pub euler_failure: Option<EulerFailure>,
    pub boxes: BoxVerdict,
}

/// Runs [`quasi_solution_check_on`] for the series built by [`build_f_v0`]
/// and [`build_g_i`].
pub fn quasi_solution_check(sys: &LinearFormSystem, i: usize, bound: i64) -> Result<QuasiVerdict> {
    let g = build_g_i(sys, i, bound)?;
    let f = build_f_v0(sys, bound)?;
    quasi_solution_check_on(sys, &LogSeries::new(i, f, g)?)
}

/// Euler check on the plain part and, for each generator `l(e_s)`, the box
/// identity for `P log λ_i + Q`.
pub fn quasi_solution_check_on(sys: &LinearFormSystem, series: &LogSeries) -> Result<QuasiVerdict> {
    let config = series.p_part.config();
    let euler = euler_check(&series.q_part).and(euler_check(&series.p_part));
    let mut boxes = BoxVerdict::new();
    for s in 0..sys.r() {
        let mut p = vec![0; sys.r()];
        p[s] = 1;
        boxes.merge(log_box_check(series, &lattice_element(config, &p)));
    }
    let euler_ok = euler.is_ok();
    Ok(QuasiVerdict {
        log_index: series.log_index,
        passed: euler_ok && boxes.passed,
        euler_ok,
        euler_failure: euler.err(),
        boxes,
    })
}

/// Setting `λ_i = 1` (`i ≤ r+J`), `λ_i = −1` (`r+J < i ≤ n`),
/// `λ_{n+s} = −t_s`.
pub trait Specialize {
    fn specialize(&self) -> Result<TruncatedSeries>;
}

impl Specialize for HGSeries {
    /// The result has total-degree cap `P`, which the `p`-box fully covers.
    fn specialize(&self) -> Result<TruncatedSeries> {
        let c = &self.config;
        let (r, n) = (c.r(), c.dim());
        let cap = u64::try_from(self.bound).map_err(|_| Error::Precondition("negative truncation bound"))?;
        let mut out = TruncatedSeries::zero(r, cap);
        for (w, coef) in &self.terms {
            let t = &w[n..];
            if t.iter().any(|&e| e < 0) {
                return Err(Error::Unsupported("negative power of t after specialization"));
            }
            let minus_ones: i64 = w[r + c.j_count()..n].iter().sum::<i64>() + t.iter().sum::<i64>();
            let sign = if minus_ones.rem_euclid(2) == 0 { BigRational::one() } else { -BigRational::one() };
            let m: Vec<u64> = t.iter().map(|&e| e as u64).collect();
            let prev = out.coeff(&m);
            out.set(&m, prev + coef * sign);
        }
        Ok(out)
    }
}

impl Specialize for LogSeries {
    fn specialize(&self) -> Result<TruncatedSeries> {
        Err(Error::Unsupported("log λ_i has no value at λ_i = ±1 in this setting"))
    }
}
