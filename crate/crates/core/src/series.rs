//! Truncated multivariate power series in `t_1, …, t_r` with exact rational
//! coefficients, and the series `F`, `G_{C_j}`, `G_{D_k}` and `exp(G/F)`.
//!
//! Truncation is by total degree: a series with cap `c` carries the
//! coefficients of all monomials `t^m` with `Σm_s ≤ c`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cells::landau_holds;
use crate::error::{Error, Result};
use crate::forms::{eval_nat, factorial_ratio, harmonic_unchecked, is_prime, LinearFormSystem};
use crate::grading::simplex_graded;
use crate::report::rat_text;

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Exponent(Vec<u64>);

impl Exponent {
    fn degree(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    r: usize,
    cap: u64,
    terms: BTreeMap<Exponent, BigRational>,
}

fn degree(m: &[u64]) -> u64 {
    m.iter().sum()
}

fn le(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minus(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl TruncatedSeries {
    pub fn zero(r: usize, cap: u64) -> Self {
        TruncatedSeries { r, cap, terms: BTreeMap::new() }
    }

    pub fn one(r: usize, cap: u64) -> Self {
        Self::constant(r, cap, BigRational::one())
    }

    pub fn constant(r: usize, cap: u64, c: BigRational) -> Self {
        let mut s = Self::zero(r, cap);
        s.set(&vec![0; r], c);
        s
    }

    /// `c · t^m` (zero when `m` lies beyond the cap).
    pub fn monomial(r: usize, cap: u64, m: &[u64], c: BigRational) -> Self {
        assert_eq!(m.len(), r);
        let mut s = Self::zero(r, cap);
        s.set(m, c);
        s
    }

    /// `t_s` for 1-based `s`.
    pub fn variable(r: usize, cap: u64, s: usize) -> Self {
        let mut m = vec![0; r];
        m[s - 1] = 1;
        Self::monomial(r, cap, &m, BigRational::one())
    }

    pub fn from_terms<I>(r: usize, cap: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u64>, BigRational)>,
    {
        let mut s = Self::zero(r, cap);
        for (m, c) in terms {
            assert_eq!(m.len(), r, "exponent width");
            let sum = s.coeff(&m) + c;
            s.set(&m, sum);
        }
        s
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Stores `c` at `m`; zero coefficients and exponents past the cap are dropped.
    pub fn set(&mut self, m: &[u64], c: BigRational) {
        if degree(m) > self.cap {
            return;
        }
        if c.is_zero() {
            self.terms.remove(&Exponent(m.to_vec()));
        } else {
            self.terms.insert(Exponent(m.to_vec()), c);
        }
    }

    pub fn coeff(&self, m: &[u64]) -> BigRational {
        self.terms.get(&Exponent(m.to_vec())).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&vec![0; self.r])
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u64], &BigRational)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same series with a smaller cap.
    pub fn truncate(&self, cap: u64) -> Self {
        let cap = cap.min(self.cap);
        let terms = self.terms.iter().filter(|(m, _)| m.degree() <= cap).map(|(m, c)| (m.clone(), c.clone()));
        TruncatedSeries { r: self.r, cap, terms: terms.collect() }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.cap != other.cap {
            return Err(Error::SeriesMismatch(format!(
                "(r={}, cap={}) vs (r={}, cap={})",
                self.r, self.cap, other.r, other.cap
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let sum = out.coeff(&m.0) + c;
            out.set(&m.0, sum);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(self.r, self.cap);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut acc: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (a, x) in &self.terms {
            let room = self.cap - a.degree();
            for (b, y) in other.terms.iter().take_while(|(b, _)| b.degree() <= room) {
                let m = Exponent(a.0.iter().zip(&b.0).map(|(p, q)| p + q).collect());
                *acc.entry(m).or_insert_with(BigRational::zero) += x * y;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries { r: self.r, cap: self.cap, terms: acc })
    }

    /// `self / denominator` through the cap.
    pub fn divide(&self, denominator: &Self) -> Result<Self> {
        self.same_shape(denominator)?;
        let d0 = denominator.constant_term();
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = d0.recip();
        let mut q = Self::zero(self.r, self.cap);
        for m in simplex_graded(self.r, self.cap) {
            let mut c = self.coeff(&m);
            for (b, y) in denominator.terms.iter().skip(1) {
                if b.degree() > degree(&m) {
                    break;
                }
                if le(&b.0, &m) {
                    if let Some(x) = q.terms.get(&Exponent(minus(&m, &b.0))) {
                        c -= x * y;
                    }
                }
            }
            q.set(&m, c * &inv);
        }
        Ok(q)
    }

    /// `exp(self)`, from `θE = θS · E` with `θ = Σ t_s ∂/∂t_s`: the
    /// coefficient at `m` is `(1/|m|) Σ_{0 ≠ m' ≤ m} |m'| S_{m'} E_{m−m'}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut e = Self::one(self.r, self.cap);
        for m in simplex_graded(self.r, self.cap).skip(1) {
            let dm = degree(&m);
            let mut c = BigRational::zero();
            for (a, x) in &self.terms {
                if a.degree() > dm {
                    break;
                }
                if le(&a.0, &m) {
                    if let Some(y) = e.terms.get(&Exponent(minus(&m, &a.0))) {
                        c += x * y * BigInt::from(a.degree());
                    }
                }
            }
            e.set(&m, c / BigInt::from(dm));
        }
        Ok(e)
    }

    /// `log(self)` for a series with constant term 1, from `θA = A · θL`.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::Precondition("log needs constant term 1"));
        }
        let mut l = Self::zero(self.r, self.cap);
        for m in simplex_graded(self.r, self.cap).skip(1) {
            let dm = degree(&m);
            let mut c = self.coeff(&m) * BigInt::from(dm);
            for (a, x) in self.terms.iter().skip(1) {
                if a.degree() >= dm {
                    break;
                }
                if le(&a.0, &m) {
                    let rest = minus(&m, &a.0);
                    if let Some(y) = l.terms.get(&Exponent(rest.clone())) {
                        c -= x * y * BigInt::from(degree(&rest));
                    }
                }
            }
            l.set(&m, c / BigInt::from(dm));
        }
        Ok(l)
    }

    /// One line per nonzero term, `m_1 … m_r : n/d`, graded-lex order.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms() {
            let exps: Vec<String> = m.iter().map(u64::to_string).collect();
            out.push_str(&exps.join(" "));
            out.push_str(" : ");
            out.push_str(&rat_text(c));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`to_canonical_text`](Self::to_canonical_text).
    pub fn parse_canonical_text(r: usize, cap: u64, text: &str) -> Result<Self> {
        let bad = |line: &str| Error::SeriesMismatch(format!("malformed term line {line:?}"));
        let mut s = Self::zero(r, cap);
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (lhs, rhs) = line.split_once(':').ok_or_else(|| bad(line))?;
            let m: Vec<u64> = lhs
                .split_whitespace()
                .map(u64::from_str)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad(line))?;
            if m.len() != r || degree(&m) > cap {
                return Err(bad(line));
            }
            let c = BigRational::from_str(rhs.trim()).map_err(|_| bad(line))?;
            s.set(&m, c);
        }
        Ok(s)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}

/// `F(t) = Σ E(m) t^m`.
pub fn series_f(sys: &LinearFormSystem, cap: u64) -> TruncatedSeries {
    let r = sys.r();
    TruncatedSeries::from_terms(r, cap, simplex_graded(r, cap).map(|m| {
        let e = factorial_ratio(sys, &m);
        (m, e)
    }))
}

fn weighted_series(sys: &LinearFormSystem, form: &[i64], cap: u64) -> TruncatedSeries {
    let r = sys.r();
    let mut s = TruncatedSeries::zero(r, cap);
    for m in simplex_graded(r, cap) {
        let v = eval_nat(form, &m);
        if v != 0 {
            let c = factorial_ratio(sys, &m) * harmonic_unchecked(v);
            s.set(&m, c);
        }
    }
    s
}

fn checked_index(what: &'static str, index: usize, max: usize) -> Result<usize> {
    if index == 0 || index > max {
        return Err(Error::IndexOutOfRange { what, index, max });
    }
    Ok(index - 1)
}

/// `G_{C_j}(t) = Σ_{C_j(m) ≠ 0} E(m) H_{C_j(m)} t^m`, 1-based `j`.
pub fn series_g_c(sys: &LinearFormSystem, j: usize, cap: u64) -> Result<TruncatedSeries> {
    let j = checked_index("C", j, sys.j_count())?;
    Ok(weighted_series(sys, &sys.c()[j], cap))
}

/// `G_{D_k}(t) = Σ_{D_k(m) ≠ 0} E(m) H_{D_k(m)} t^m`, 1-based `k`.
pub fn series_g_d(sys: &LinearFormSystem, k: usize, cap: u64) -> Result<TruncatedSeries> {
    let k = checked_index("D", k, sys.k_count())?;
    Ok(weighted_series(sys, &sys.d()[k], cap))
}

/// Which form a mirror map is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FormIndex {
    C(usize),
    D(usize),
}

impl fmt::Display for FormIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormIndex::C(j) => write!(f, "C{j}"),
            FormIndex::D(k) => write!(f, "D{k}"),
        }
    }
}

impl FromStr for FormIndex {
    type Err = String;

    /// Accepts `C3`, `D1` (case-insensitive).
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let idx: usize = tail.parse().map_err(|_| format!("bad form index {s:?}"))?;
        match head {
            "C" | "c" => Ok(FormIndex::C(idx)),
            "D" | "d" => Ok(FormIndex::D(idx)),
            _ => Err(format!("bad form index {s:?}")),
        }
    }
}

/// All form indices `C1, …, CJ, D1, …, DK`.
pub fn all_form_indices(sys: &LinearFormSystem) -> Vec<FormIndex> {
    (1..=sys.j_count())
        .map(FormIndex::C)
        .chain((1..=sys.k_count()).map(FormIndex::D))
        .collect()
}

pub fn series_g(sys: &LinearFormSystem, which: FormIndex, cap: u64) -> Result<TruncatedSeries> {
    match which {
        FormIndex::C(j) => series_g_c(sys, j, cap),
        FormIndex::D(k) => series_g_d(sys, k, cap),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesWitness {
    pub m: Vec<u64>,
    #[serde(serialize_with = "crate::report::ser_rat")]
    pub coefficient: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralityReport {
    pub all_integral: bool,
    pub prime: Option<u64>,
    /// Degree bound the scan covered; an empty witness list only speaks up to it.
    pub cap: u64,
    pub witnesses: Vec<SeriesWitness>,
}

impl IntegralityReport {
    pub fn first_witness(&self) -> Option<&SeriesWitness> {
        self.witnesses.first()
    }
}

/// Scans every stored coefficient for a denominator other than 1 (or, with
/// a prime `p`, for a denominator divisible by `p`).
pub fn integrality_report(s: &TruncatedSeries, p: Option<u64>) -> Result<IntegralityReport> {
    if let Some(p) = p {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let bad = |c: &BigRational| match p {
        None => !c.denom().is_one(),
        Some(p) => c.denom().is_multiple_of(&BigInt::from(p)),
    };
    let witnesses: Vec<SeriesWitness> = s
        .terms()
        .filter(|(_, c)| bad(c))
        .map(|(m, c)| SeriesWitness { m: m.to_vec(), coefficient: c.clone() })
        .collect();
    Ok(IntegralityReport { all_integral: witnesses.is_empty(), prime: p, cap: s.cap(), witnesses })
}

/// `exp(G/F)` for the chosen form together with its integrality report.
/// Requires `F` to be integral, i.e. the Landau criterion.
pub fn mirror_map(
    sys: &LinearFormSystem,
    which: FormIndex,
    cap: u64,
) -> Result<(TruncatedSeries, IntegralityReport)> {
    if !landau_holds(sys) {
        return Err(Error::Precondition("Landau criterion fails, so F is not integral"));
    }
    mirror_map_unchecked(sys, which, cap)
}

/// [`mirror_map`] without the Landau precondition.
pub fn mirror_map_unchecked(
    sys: &LinearFormSystem,
    which: FormIndex,
    cap: u64,
) -> Result<(TruncatedSeries, IntegralityReport)> {
    let f = series_f(sys, cap);
    let g = series_g(sys, which, cap)?;
    let q = g.divide(&f)?.exp()?;
    let report = integrality_report(&q, None)?;
    Ok((q, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::validate_system;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn binomial() -> LinearFormSystem {
        validate_system(&[vec![2]], &[vec![1], vec![1]]).unwrap()
    }

    fn inverse() -> LinearFormSystem {
        validate_system(&[vec![1], vec![1]], &[vec![2]]).unwrap()
    }

    fn two_var() -> LinearFormSystem {
        validate_system(&[vec![1, 1]], &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn f_examples() {
        let f = series_f(&binomial(), 3);
        assert_eq!(f.to_canonical_text(), "0 : 1/1\n1 : 2/1\n2 : 6/1\n3 : 20/1\n");
        assert_eq!(series_f(&two_var(), 2).coeff(&[1, 1]), q(2, 1));
        assert_eq!(series_f(&inverse(), 4).constant_term(), q(1, 1));
    }

    #[test]
    fn g_examples() {
        let gc = series_g_c(&binomial(), 1, 3).unwrap();
        assert_eq!(gc.coeff(&[1]), q(3, 1));
        assert!(gc.constant_term().is_zero());
        assert_eq!(series_g_d(&binomial(), 1, 3).unwrap().coeff(&[1]), q(2, 1));
        assert!(matches!(series_g_c(&binomial(), 2, 3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(series_g_d(&binomial(), 0, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn divide_examples() {
        let f = series_f(&binomial(), 5);
        assert_eq!(f.divide(&f).unwrap(), TruncatedSeries::one(1, 5));
        let one_minus_t = TruncatedSeries::one(1, 4).sub(&TruncatedSeries::variable(1, 4, 1)).unwrap();
        let geo = TruncatedSeries::one(1, 4).divide(&one_minus_t).unwrap();
        assert!((0..=4).all(|i| geo.coeff(&[i]) == q(1, 1)));
        let ratio = series_g_c(&binomial(), 1, 3).unwrap().divide(&series_f(&binomial(), 3)).unwrap();
        assert_eq!(ratio.coeff(&[1]), q(3, 1));
        let g = series_g_c(&binomial(), 1, 3).unwrap();
        assert_eq!(f.truncate(3).divide(&g), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TruncatedSeries::zero(2, 4).exp().unwrap(), TruncatedSeries::one(2, 4));
        let e = TruncatedSeries::variable(1, 3, 1).exp().unwrap();
        assert_eq!(e.to_canonical_text(), "0 : 1/1\n1 : 1/1\n2 : 1/2\n3 : 1/6\n");
        assert_eq!(TruncatedSeries::one(1, 3).exp(), Err(Error::NonzeroConstantTerm));
        assert_eq!(e.log().unwrap(), TruncatedSeries::variable(1, 3, 1));
    }

    #[test]
    fn mirror_examples() {
        let (m, rep) = mirror_map(&binomial(), FormIndex::C(1), 8).unwrap();
        assert!(rep.all_integral);
        assert_eq!(m.constant_term(), q(1, 1));
        for idx in all_form_indices(&two_var()) {
            let (m, rep) = mirror_map(&two_var(), idx, 6).unwrap();
            assert!(rep.all_integral, "{idx}");
            assert_eq!(m.constant_term(), q(1, 1));
        }
        assert!(matches!(mirror_map(&inverse(), FormIndex::C(1), 4), Err(Error::Precondition(_))));
    }

    #[test]
    fn report_examples() {
        assert!(integrality_report(&series_f(&binomial(), 8), None).unwrap().all_integral);
        let rep = integrality_report(&series_f(&inverse(), 4), None).unwrap();
        assert!(!rep.all_integral);
        // graded order puts m=1 (1/2) first; m=2 carries 1/6
        assert_eq!(rep.witnesses[0], SeriesWitness { m: vec![1], coefficient: q(1, 2) });
        assert!(rep.witnesses.contains(&SeriesWitness { m: vec![2], coefficient: q(1, 6) }));
        let one_sixth = TruncatedSeries::constant(1, 0, q(1, 6));
        assert!(integrality_report(&one_sixth, Some(5)).unwrap().all_integral);
        assert!(!integrality_report(&one_sixth, Some(3)).unwrap().all_integral);
        assert_eq!(integrality_report(&one_sixth, Some(6)), Err(Error::NotPrime(6)));
    }

    #[test]
    fn canonical_text_round_trip() {
        let s = series_g_c(&two_var(), 1, 4).unwrap();
        let text = s.to_canonical_text();
        assert_eq!(TruncatedSeries::parse_canonical_text(2, 4, &text).unwrap(), s);
        assert!(text.starts_with("0 1 : 1/1\n1 0 : 1/1\n"));
    }

    #[test]
    fn form_index_parsing() {
        assert_eq!("C2".parse::<FormIndex>(), Ok(FormIndex::C(2)));
        assert_eq!("d1".parse::<FormIndex>(), Ok(FormIndex::D(1)));
        assert!("X1".parse::<FormIndex>().is_err());
        assert!("C".parse::<FormIndex>().is_err());
    }
}
