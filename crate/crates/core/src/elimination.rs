//! Exact Fourier–Motzkin elimination over systems mixing weak (`≥`) and
//! strict (`>`) linear inequalities with integer coefficients.
//!
//! Rows stay integral throughout: combining a lower and an upper bound on the
//! eliminated variable cross-multiplies by the (positive) pivot magnitudes and
//! divides by the content. A combination is strict when either parent is.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `coeffs · x ≥ rhs`, or `>` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
    pub strict: bool,
}

impl Constraint {
    fn normalized(mut self) -> Self {
        let g = self.coeffs.iter().fold(self.rhs.abs(), |g, a| g.gcd(a));
        if !g.is_zero() && !g.is_one() {
            self.coeffs.iter_mut().for_each(|a| *a /= &g);
            self.rhs /= &g;
        }
        self
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// For a constant row: does `0 ≥ rhs` (or `0 > rhs`) hold?
    fn constant_holds(&self) -> bool {
        if self.strict {
            self.rhs.is_negative()
        } else {
            !self.rhs.is_positive()
        }
    }

    pub fn holds_at(&self, x: &[BigRational]) -> bool {
        let lhs = self
            .coeffs
            .iter()
            .zip(x)
            .fold(BigRational::zero(), |acc, (a, xi)| acc + xi * a);
        let rhs = BigRational::from_integer(self.rhs.clone());
        if self.strict {
            lhs > rhs
        } else {
            lhs >= rhs
        }
    }
}

/// Polyhedron cut out by weak and strict inequalities in `dim` variables.
#[derive(Clone, Debug, Default)]
pub struct HalfOpenPolyhedron {
    dim: usize,
    rows: Vec<Constraint>,
}

/// Bound on one variable: value and whether it is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: BigRational,
    pub strict: bool,
}

/// Projection of a polyhedron onto one coordinate axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        match (&self.lower, &self.upper) {
            (Some(lo), Some(hi)) => {
                lo.value > hi.value || (lo.value == hi.value && (lo.strict || hi.strict))
            }
            _ => false,
        }
    }

    /// Smallest integer inside the interval, if bounded below.
    pub fn min_integer(&self) -> Option<BigInt> {
        self.lower.as_ref().map(|lo| {
            let c = lo.value.ceil().to_integer();
            if lo.strict && BigRational::from_integer(c.clone()) == lo.value {
                c + 1
            } else {
                c
            }
        })
    }

    /// Largest integer inside the interval, if bounded above.
    pub fn max_integer(&self) -> Option<BigInt> {
        self.upper.as_ref().map(|hi| {
            let f = hi.value.floor().to_integer();
            if hi.strict && BigRational::from_integer(f.clone()) == hi.value {
                f - 1
            } else {
                f
            }
        })
    }

    /// Lower endpoint when attained, otherwise the midpoint; unbounded sides
    /// step one unit away from the finite end.
    pub fn pick(&self) -> BigRational {
        let two = BigRational::from_integer(2.into());
        match (&self.lower, &self.upper) {
            (Some(lo), _) if !lo.strict => lo.value.clone(),
            (Some(lo), Some(hi)) => (&lo.value + &hi.value) / two,
            (Some(lo), None) => &lo.value + BigRational::one(),
            (None, Some(hi)) if !hi.strict => hi.value.clone(),
            (None, Some(hi)) => &hi.value - BigRational::one(),
            (None, None) => BigRational::zero(),
        }
    }
}

impl HalfOpenPolyhedron {
    pub fn new(dim: usize) -> Self {
        HalfOpenPolyhedron { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn push(&mut self, coeffs: Vec<BigInt>, rhs: BigInt, strict: bool) {
        assert_eq!(coeffs.len(), self.dim, "constraint width must match dimension");
        self.rows.push(Constraint { coeffs, rhs, strict }.normalized());
    }

    /// Adds `a · x ≥ b`.
    pub fn add_weak(&mut self, a: &[i64], b: i64) {
        self.push(a.iter().map(|&v| v.into()).collect(), b.into(), false);
    }

    /// Adds `a · x > b`.
    pub fn add_strict(&mut self, a: &[i64], b: i64) {
        self.push(a.iter().map(|&v| v.into()).collect(), b.into(), true);
    }

    /// Adds a rational row, clearing denominators.
    pub fn add_rational(&mut self, a: &[BigRational], b: &BigRational, strict: bool) {
        let l = a.iter().chain(std::iter::once(b)).fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let scale = |x: &BigRational| (x * &l).to_integer();
        self.push(a.iter().map(scale).collect(), scale(b), strict);
    }

    pub fn weak(&self) -> impl Iterator<Item = &Constraint> {
        self.rows.iter().filter(|c| !c.strict)
    }

    pub fn strict(&self) -> impl Iterator<Item = &Constraint> {
        self.rows.iter().filter(|c| c.strict)
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        x.len() == self.dim && self.rows.iter().all(|c| c.holds_at(x))
    }

    pub fn is_feasible(&self) -> bool {
        let mut rows = self.rows.clone();
        for var in (0..self.dim).rev() {
            match eliminate(rows, var) {
                Some(next) => rows = next,
                None => return false,
            }
        }
        rows.iter().all(Constraint::constant_holds)
    }

    /// Feasibility with a witness point, found by eliminating the variables
    /// from last to first and back-substituting.
    pub fn witness(&self) -> Option<Vec<BigRational>> {
        // stages[k] involves only variables 0..k.
        let mut stages = vec![self.rows.clone()];
        for var in (0..self.dim).rev() {
            let next = eliminate(stages.last().unwrap().clone(), var)?;
            stages.push(next);
        }
        stages.reverse();
        if !stages[0].iter().all(Constraint::constant_holds) {
            return None;
        }
        let mut x: Vec<BigRational> = Vec::with_capacity(self.dim);
        for var in 0..self.dim {
            let interval = interval_given(&stages[var + 1], var, &x);
            if interval.is_empty() {
                return None;
            }
            x.push(interval.pick());
        }
        debug_assert!(self.contains(&x));
        Some(x)
    }

    /// Exact projection onto coordinate `var`; `None` when infeasible.
    pub fn interval_of(&self, var: usize) -> Option<Interval> {
        let mut rows = self.rows.clone();
        for other in (0..self.dim).rev().filter(|&v| v != var) {
            rows = eliminate(rows, other)?;
        }
        let mut lower: Option<Bound> = None;
        let mut upper: Option<Bound> = None;
        for row in &rows {
            let a = &row.coeffs[var];
            if a.is_zero() {
                if !row.constant_holds() {
                    return None;
                }
                continue;
            }
            let value = BigRational::new(row.rhs.clone(), a.clone());
            if a.is_positive() {
                tighten_lower(&mut lower, value, row.strict);
            } else {
                tighten_upper(&mut upper, value, row.strict);
            }
        }
        let interval = Interval { lower, upper };
        (!interval.is_empty()).then_some(interval)
    }
}

fn tighten_lower(slot: &mut Option<Bound>, value: BigRational, strict: bool) {
    match slot {
        Some(b) if b.value > value => {}
        Some(b) if b.value == value => b.strict |= strict,
        _ => *slot = Some(Bound { value, strict }),
    }
}

fn tighten_upper(slot: &mut Option<Bound>, value: BigRational, strict: bool) {
    match slot {
        Some(b) if b.value < value => {}
        Some(b) if b.value == value => b.strict |= strict,
        _ => *slot = Some(Bound { value, strict }),
    }
}

/// Bounds on `x_var` once `x_0 … x_{var-1}` are fixed to `prefix`.
fn interval_given(rows: &[Constraint], var: usize, prefix: &[BigRational]) -> Interval {
    let mut lower = None;
    let mut upper = None;
    for row in rows {
        let a = &row.coeffs[var];
        if a.is_zero() {
            continue;
        }
        let mut rhs = BigRational::from_integer(row.rhs.clone());
        for (c, xi) in row.coeffs[..var].iter().zip(prefix) {
            if !c.is_zero() {
                rhs -= xi * c;
            }
        }
        let value = rhs / BigRational::from_integer(a.clone());
        if a.is_positive() {
            tighten_lower(&mut lower, value, row.strict);
        } else {
            tighten_upper(&mut upper, value, row.strict);
        }
    }
    Interval { lower, upper }
}

/// One Fourier–Motzkin step. Returns `None` as soon as a constant row is
/// violated.
fn eliminate(rows: Vec<Constraint>, var: usize) -> Option<Vec<Constraint>> {
    let mut lowers = Vec::new();
    let mut uppers = Vec::new();
    let mut out: HashMap<(Vec<BigInt>, BigInt), bool> = HashMap::new();
    let keep = |c: Constraint, out: &mut HashMap<(Vec<BigInt>, BigInt), bool>| -> bool {
        if c.is_constant() {
            return c.constant_holds();
        }
        let strict = out.entry((c.coeffs, c.rhs)).or_insert(false);
        *strict |= c.strict;
        true
    };
    for row in rows {
        let a = &row.coeffs[var];
        if a.is_positive() {
            lowers.push(row);
        } else if a.is_negative() {
            uppers.push(row);
        } else if !keep(row, &mut out) {
            return None;
        }
    }
    for lo in &lowers {
        let pa = &lo.coeffs[var];
        for up in &uppers {
            let na = -&up.coeffs[var];
            let coeffs = lo.coeffs.iter().zip(&up.coeffs).map(|(l, u)| l * &na + u * pa).collect();
            let rhs = &lo.rhs * &na + &up.rhs * pa;
            let combined = Constraint { coeffs, rhs, strict: lo.strict || up.strict }.normalized();
            if !keep(combined, &mut out) {
                return None;
            }
        }
    }
    let mut rows: Vec<Constraint> = out
        .into_iter()
        .map(|((coeffs, rhs), strict)| Constraint { coeffs, rhs, strict })
        .collect();
    rows.sort_by(|a, b| (&a.coeffs, &a.rhs, a.strict).cmp(&(&b.coeffs, &b.rhs, b.strict)));
    Some(rows)
}
