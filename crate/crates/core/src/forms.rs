//! Linear-form systems and the exact quantities attached to them: the
//! factorial ratio `E(m)`, the step function `Φ(x)` and harmonic numbers.
//!
//! A system is two families of linear forms with nonnegative integer
//! coefficients, `C_j(x) = Σ_s c_js x_s` and `D_k(x) = Σ_s d_ks x_s`, with
//! equal column sums. Everything downstream reads its data from a validated
//! [`LinearFormSystem`].

use std::cell::RefCell;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Matrix, Result, Violation};
use crate::grading;

/// Validated pair of coefficient matrices. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearFormSystem {
    r: usize,
    c: Vec<Vec<i64>>,
    d: Vec<Vec<i64>>,
}

/// Checks every hypothesis on a raw `(C, D)` pair and collects all violations.
///
/// The variable count is taken from the first row found; rows of any other
/// width are reported as [`Violation::ShapeMismatch`].
pub fn validate_system(raw_c: &[Vec<i64>], raw_d: &[Vec<i64>]) -> Result<LinearFormSystem> {
    let r = raw_c.first().or_else(|| raw_d.first()).map_or(0, Vec::len);
    validate_with_width(r, raw_c, raw_d)
}

/// Like [`validate_system`] but with an explicit variable count.
pub fn validate_with_width(
    r: usize,
    raw_c: &[Vec<i64>],
    raw_d: &[Vec<i64>],
) -> Result<LinearFormSystem> {
    let mut bad = Vec::new();
    if r == 0 || raw_c.is_empty() || raw_d.is_empty() {
        bad.push(Violation::EmptySystem);
    }
    let mut shape_ok = true;
    for (matrix, rows) in [(Matrix::C, raw_c), (Matrix::D, raw_d)] {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r {
                shape_ok = false;
                bad.push(Violation::ShapeMismatch {
                    matrix,
                    row: i + 1,
                    expected: r,
                    found: row.len(),
                });
            }
            for (s, &v) in row.iter().enumerate() {
                if v < 0 {
                    bad.push(Violation::NegativeEntry { matrix, row: i + 1, column: s + 1, value: v });
                }
            }
            if row.iter().all(|&v| v == 0) {
                bad.push(Violation::ZeroForm { matrix, row: i + 1 });
            }
        }
    }
    for (j, cr) in raw_c.iter().enumerate() {
        for (k, dr) in raw_d.iter().enumerate() {
            if cr == dr {
                bad.push(Violation::DuplicateForm { c_row: j + 1, d_row: k + 1 });
            }
        }
    }
    if shape_ok {
        for s in 0..r {
            let c_sum: i64 = raw_c.iter().map(|row| row[s]).sum();
            let d_sum: i64 = raw_d.iter().map(|row| row[s]).sum();
            let used = raw_c.iter().chain(raw_d).any(|row| row[s] != 0);
            if !used {
                bad.push(Violation::UnusedVariable { column: s + 1 });
            }
            if c_sum != d_sum {
                bad.push(Violation::Unbalanced { column: s + 1, c_sum, d_sum });
            }
        }
    }
    if bad.is_empty() {
        Ok(LinearFormSystem { r, c: raw_c.to_vec(), d: raw_d.to_vec() })
    } else {
        Err(Error::Invalid(bad))
    }
}

impl LinearFormSystem {
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of numerator forms `J`.
    pub fn j_count(&self) -> usize {
        self.c.len()
    }

    /// Number of denominator forms `K`.
    pub fn k_count(&self) -> usize {
        self.d.len()
    }

    pub fn c(&self) -> &[Vec<i64>] {
        &self.c
    }

    pub fn d(&self) -> &[Vec<i64>] {
        &self.d
    }

    /// The system with numerator and denominator families exchanged.
    pub fn swapped(&self) -> LinearFormSystem {
        LinearFormSystem { r: self.r, c: self.d.clone(), d: self.c.clone() }
    }

    /// All forms in the order `C_1, …, C_J, D_1, …, D_K`.
    pub fn forms(&self) -> impl Iterator<Item = &[i64]> {
        self.c.iter().chain(&self.d).map(Vec::as_slice)
    }

    /// `C_j(1, …, 1)` for each j, then `D_k(1, …, 1)` for each k.
    pub fn coefficient_sums(&self) -> Vec<i64> {
        self.forms().map(|f| f.iter().sum()).collect()
    }
}

/// Evaluates a form at an integer point (`p` may have negative entries).
pub fn eval_int(form: &[i64], p: &[i64]) -> i64 {
    form.iter().zip(p).map(|(a, b)| a * b).sum()
}

pub(crate) fn eval_nat(form: &[i64], m: &[u64]) -> u64 {
    form.iter().zip(m).map(|(&a, &b)| a as u64 * b).sum()
}

pub(crate) fn eval_rat(form: &[i64], x: &[BigRational]) -> BigRational {
    form.iter()
        .zip(x)
        .filter(|(a, _)| **a != 0)
        .fold(BigRational::zero(), |acc, (&a, xi)| acc + xi * BigInt::from(a))
}

/// Point of the half-open unit cube `[0, 1)^r` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        for (i, x) in coords.iter().enumerate() {
            if x.is_negative() || *x >= BigRational::one() {
                return Err(Error::PointOutOfRange { index: i + 1, value: x.to_string() });
            }
        }
        Ok(RationalPoint(coords))
    }

    /// Builds `(a_1/q, …, a_r/q)`.
    pub fn from_fractions(numerators: &[i64], q: i64) -> Result<Self> {
        let q = BigInt::from(q);
        Self::new(
            numerators
                .iter()
                .map(|&a| BigRational::new(BigInt::from(a), q.clone()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigRational> {
        self.0
    }

    /// Least common multiple of the coordinate denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }
}

/// Floor of an exact rational; the denominator is always positive so this is
/// floor division of the numerator.
pub fn floor_rat(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `Φ(x) = Σ_j ⌊C_j(x)⌋ − Σ_k ⌊D_k(x)⌋` at a point of `[0, 1)^r`.
pub fn phi(sys: &LinearFormSystem, x: &RationalPoint) -> Result<i64> {
    if x.coords().len() != sys.r() {
        return Err(Error::DimensionMismatch { expected: sys.r(), found: x.coords().len() });
    }
    Ok(phi_at(sys, x.coords()))
}

/// The step-function formula at an arbitrary rational point (no range check).
pub fn phi_at(sys: &LinearFormSystem, x: &[BigRational]) -> i64 {
    let sum = |forms: &[Vec<i64>]| -> BigInt { forms.iter().map(|f| floor_rat(&eval_rat(f, x))).sum() };
    let v = sum(sys.c()) - sum(sys.d());
    i64::try_from(v).expect("step function value fits in i64")
}

/// `Φ(a/q)` for an integer numerator vector; floors are integer divisions.
pub(crate) fn phi_grid(sys: &LinearFormSystem, a: &[i64], q: i64) -> i64 {
    let c: i64 = sys.c().iter().map(|f| eval_int(f, a).div_euclid(q)).sum();
    let d: i64 = sys.d().iter().map(|f| eval_int(f, a).div_euclid(q)).sum();
    c - d
}

thread_local! {
    static FACTORIALS: RefCell<Vec<BigInt>> = RefCell::new(vec![BigInt::one()]);
    static HARMONICS: RefCell<Vec<BigRational>> = RefCell::new(vec![BigRational::zero()]);
}

/// `n!`, memoized per thread up to the largest argument seen.
pub fn factorial(n: u64) -> BigInt {
    FACTORIALS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() as u64 <= n {
            let next = table.last().unwrap() * BigInt::from(table.len() as u64);
            table.push(next);
        }
        table[n as usize].clone()
    })
}

/// `H_M = Σ_{i=1}^{M} 1/i`.
pub fn harmonic(m: i64) -> Result<BigRational> {
    if m <= 0 {
        return Err(Error::NonPositiveHarmonic(m));
    }
    Ok(harmonic_unchecked(m as u64))
}

pub(crate) fn harmonic_unchecked(m: u64) -> BigRational {
    HARMONICS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() as u64 <= m {
            let i = table.len() as u64;
            let next = table.last().unwrap() + BigRational::new(BigInt::one(), BigInt::from(i));
            table.push(next);
        }
        table[m as usize].clone()
    })
}

/// `E(m) = Π_j C_j(m)! / Π_k D_k(m)!` as a reduced fraction.
pub fn factorial_ratio(sys: &LinearFormSystem, m: &[u64]) -> BigRational {
    let num: BigInt = sys.c().iter().map(|f| factorial(eval_nat(f, m))).product();
    let den: BigInt = sys.d().iter().map(|f| factorial(eval_nat(f, m))).product();
    BigRational::new(num, den)
}

/// Exponent of `p` in `n!` (Legendre).
fn legendre(mut n: u64, p: u64) -> u64 {
    let mut v = 0;
    while n >= p {
        n /= p;
        v += n;
    }
    v
}

fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            (i * i..=n).step_by(i).for_each(|k| sieve[k] = false);
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u64).collect()
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Integrality of `E(m)` decided prime by prime with Legendre's formula,
/// without materializing the factorials.
pub fn ratio_is_integral(sys: &LinearFormSystem, m: &[u64]) -> bool {
    let cs: Vec<u64> = sys.c().iter().map(|f| eval_nat(f, m)).collect();
    let ds: Vec<u64> = sys.d().iter().map(|f| eval_nat(f, m)).collect();
    let top = ds.iter().copied().max().unwrap_or(0);
    primes_up_to(top).into_iter().all(|p| {
        let up: u64 = cs.iter().map(|&n| legendre(n, p)).sum();
        let down: u64 = ds.iter().map(|&n| legendre(n, p)).sum();
        up >= down
    })
}

/// A point `m` with non-integral `E(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioWitness {
    pub m: Vec<u64>,
    #[serde(serialize_with = "crate::report::ser_rat")]
    pub value: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub bound: u64,
    pub points_checked: u64,
    pub witnesses: Vec<RatioWitness>,
}

impl ScanReport {
    pub fn all_integral(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn first_witness(&self) -> Option<&RatioWitness> {
        self.witnesses.first()
    }
}

/// Evaluates `E(m)` on `[0, bound]^r` in graded-lex order. Stops at the first
/// non-integral value unless `collect_all` is set.
pub fn integrality_scan(sys: &LinearFormSystem, bound: u64, collect_all: bool) -> ScanReport {
    let mut report = ScanReport { bound, points_checked: 0, witnesses: Vec::new() };
    for m in grading::box_graded(sys.r(), bound) {
        report.points_checked += 1;
        if !ratio_is_integral(sys, &m) {
            let value = factorial_ratio(sys, &m);
            report.witnesses.push(RatioWitness { m, value });
            if !collect_all {
                break;
            }
        }
    }
    report
}

/// Scans boxes `start, 2·start, …` up to `cap` until a witness turns up.
pub fn find_witness_adaptive(sys: &LinearFormSystem, start: u64, cap: u64) -> (u64, Option<RatioWitness>) {
    let mut bound = start.max(1).min(cap);
    loop {
        let report = integrality_scan(sys, bound, false);
        if let Some(w) = report.witnesses.into_iter().next() {
            return (bound, Some(w));
        }
        if bound >= cap {
            return (bound, None);
        }
        bound = (bound * 2).min(cap);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnCheck {
    pub column: usize,
    pub max_c: i64,
    pub max_d: i64,
    pub ok: bool,
}

/// `max_j c_js ≥ max_k d_ks` per column; a failing column rules out integrality.
pub fn column_max_precheck(sys: &LinearFormSystem) -> Vec<ColumnCheck> {
    (0..sys.r())
        .map(|s| {
            let max_c = sys.c().iter().map(|f| f[s]).max().unwrap_or(0);
            let max_d = sys.d().iter().map(|f| f[s]).max().unwrap_or(0);
            ColumnCheck { column: s + 1, max_c, max_d, ok: max_c >= max_d }
        })
        .collect()
}
