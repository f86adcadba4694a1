//! Exact decision of `Φ ≥ 0` on `[0,1)^r` and `Φ ≥ 1` on the set `𝒟`.
//!
//! The floor values `⌊C_j(x)⌋`, `⌊D_k(x)⌋` are constant on half-open cells
//! `m_j ≤ C_j(x) < m_j + 1`, `n_k ≤ D_k(x) < n_k + 1`, `0 ≤ x_s < 1`, and `Φ`
//! equals `Σm − Σn` on each nonempty cell. Minimizing `Φ` therefore reduces
//! to finding the nonempty cells, which is a finite number of exact
//! feasibility problems.

use num_bigint::BigInt;
use serde::Serialize;

pub use crate::elimination::HalfOpenPolyhedron;
use crate::error::{Error, Result};
use crate::forms::{phi_grid, LinearFormSystem, RationalPoint};

/// Candidate floor values `(m, n)` of the numerator and denominator forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellSignature {
    pub m: Vec<i64>,
    pub n: Vec<i64>,
}

impl CellSignature {
    /// Value of `Φ` on the cell.
    pub fn value(&self) -> i64 {
        self.m.iter().sum::<i64>() - self.n.iter().sum::<i64>()
    }

    /// Whether the cell lies in `𝒟` (some form reaches 1).
    pub fn in_d(&self) -> bool {
        self.m.iter().chain(&self.n).any(|&v| v >= 1)
    }

    fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.m.iter().chain(&self.n).copied()
    }
}

/// Largest admissible floor value of each form, `C(1,…,1) − 1`.
fn floor_caps(sys: &LinearFormSystem) -> Vec<i64> {
    sys.coefficient_sums().into_iter().map(|s| s - 1).collect()
}

/// Every signature inside the admissible bounds, sorted by `Σm − Σn`
/// ascending (ties in lexicographic order).
pub fn enumerate_signatures(sys: &LinearFormSystem) -> impl Iterator<Item = CellSignature> {
    let caps = floor_caps(sys);
    let j = sys.j_count();
    let mut all: Vec<CellSignature> = Vec::new();
    let mut cur = vec![0i64; caps.len()];
    loop {
        all.push(CellSignature { m: cur[..j].to_vec(), n: cur[j..].to_vec() });
        // odometer increment
        let mut pos = caps.len();
        loop {
            if pos == 0 {
                all.sort_by_key(|s| (s.value(), s.clone()));
                return all.into_iter();
            }
            pos -= 1;
            if cur[pos] < caps[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
        }
    }
}

fn unit_cube(r: usize) -> HalfOpenPolyhedron {
    let mut poly = HalfOpenPolyhedron::new(r);
    for s in 0..r {
        let mut e = vec![0i64; r];
        e[s] = 1;
        poly.add_weak(&e, 0);
        e[s] = -1;
        poly.add_strict(&e, -1);
    }
    poly
}

fn add_floor_band(poly: &mut HalfOpenPolyhedron, form: &[i64], value: i64) {
    poly.add_weak(form, value);
    let neg: Vec<i64> = form.iter().map(|a| -a).collect();
    poly.add_strict(&neg, -(value + 1));
}

/// The half-open polyhedron on which the floors take the values in `sig`.
pub fn cell_polyhedron(sys: &LinearFormSystem, sig: &CellSignature) -> HalfOpenPolyhedron {
    let mut poly = unit_cube(sys.r());
    for (form, v) in sys.forms().zip(sig.values()) {
        add_floor_band(&mut poly, form, v);
    }
    poly
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellVerdict {
    pub feasible: bool,
    pub witness: Option<RationalPoint>,
}

pub fn cell_feasible(sys: &LinearFormSystem, sig: &CellSignature) -> CellVerdict {
    let witness = cell_polyhedron(sys, sig)
        .witness()
        .map(|x| RationalPoint::new(x).expect("cell witnesses lie in the unit cube"));
    CellVerdict { feasible: witness.is_some(), witness }
}

/// A nonempty cell together with a point inside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibleCell {
    pub signature: CellSignature,
    #[serde(serialize_with = "crate::report::ser_point")]
    pub witness: RationalPoint,
}

/// All nonempty cells, found depth-first one form at a time so that empty
/// partial signatures are pruned before their extensions are generated.
pub fn feasible_cells(sys: &LinearFormSystem) -> Vec<FeasibleCell> {
    let caps = floor_caps(sys);
    let forms: Vec<&[i64]> = sys.forms().collect();
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(forms.len());
    descend(sys, &forms, &caps, unit_cube(sys.r()), &mut values, &mut out);
    out.sort_by_key(|c| (c.signature.value(), c.signature.clone()));
    out
}

fn descend(
    sys: &LinearFormSystem,
    forms: &[&[i64]],
    caps: &[i64],
    poly: HalfOpenPolyhedron,
    values: &mut Vec<i64>,
    out: &mut Vec<FeasibleCell>,
) {
    let depth = values.len();
    if depth == forms.len() {
        if let Some(x) = poly.witness() {
            let j = sys.j_count();
            out.push(FeasibleCell {
                signature: CellSignature { m: values[..j].to_vec(), n: values[j..].to_vec() },
                witness: RationalPoint::new(x).expect("cell witnesses lie in the unit cube"),
            });
        }
        return;
    }
    for v in 0..=caps[depth] {
        let mut next = poly.clone();
        add_floor_band(&mut next, forms[depth], v);
        if depth + 1 < forms.len() && !next.is_feasible() {
            continue;
        }
        values.push(v);
        descend(sys, forms, caps, next, values, out);
        values.pop();
    }
}

/// Minimum of `Φ` over `[0,1)^r` and over `𝒟`, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiSummary {
    pub min_value: i64,
    pub witness_cell: CellSignature,
    #[serde(serialize_with = "crate::report::ser_point")]
    pub witness_point: RationalPoint,
    /// `None` when `𝒟` is empty.
    pub min_on_d: Option<i64>,
    pub witness_cell_on_d: Option<CellSignature>,
    #[serde(serialize_with = "crate::report::ser_opt_point")]
    pub witness_point_on_d: Option<RationalPoint>,
    pub feasible_cell_count: usize,
}

impl PhiSummary {
    pub fn landau_holds(&self) -> bool {
        self.min_value >= 0
    }

    /// `Φ ≥ 1` on `𝒟`, ignoring the Landau precondition.
    pub fn phi_at_least_one_on_d(&self) -> bool {
        self.min_on_d.map_or(true, |v| v >= 1)
    }

    pub fn delaygue_holds(&self) -> Result<bool> {
        if !self.landau_holds() {
            return Err(Error::Precondition("the Delaygue criterion presupposes the Landau criterion"));
        }
        Ok(self.phi_at_least_one_on_d())
    }

    /// Least common multiple of the witness-point denominators.
    pub fn witness_denominator(&self) -> BigInt {
        let base = self.witness_point.common_denominator();
        match &self.witness_point_on_d {
            Some(p) => num_integer::lcm(base, p.common_denominator()),
            None => base,
        }
    }
}

pub fn min_phi(sys: &LinearFormSystem) -> PhiSummary {
    let cells = feasible_cells(sys);
    summarize(&cells)
}

pub(crate) fn summarize(cells: &[FeasibleCell]) -> PhiSummary {
    // The cell of x = 0 is always nonempty, so `cells` is never empty.
    let best = &cells[0];
    let on_d = cells.iter().find(|c| c.signature.in_d());
    PhiSummary {
        min_value: best.signature.value(),
        witness_cell: best.signature.clone(),
        witness_point: best.witness.clone(),
        min_on_d: on_d.map(|c| c.signature.value()),
        witness_cell_on_d: on_d.map(|c| c.signature.clone()),
        witness_point_on_d: on_d.map(|c| c.witness.clone()),
        feasible_cell_count: cells.len(),
    }
}

/// Landau's criterion: `Φ(x) ≥ 0` for all `x ∈ [0,1)^r`.
pub fn landau_holds(sys: &LinearFormSystem) -> bool {
    min_phi(sys).landau_holds()
}

/// Delaygue's criterion: `Φ(x) ≥ 1` on `𝒟`. Errors if Landau fails.
pub fn delaygue_holds(sys: &LinearFormSystem) -> Result<bool> {
    min_phi(sys).delaygue_holds()
}

fn grid_values(sys: &LinearFormSystem, q: u32) -> Result<impl Iterator<Item = i64> + '_> {
    if q == 0 {
        return Err(Error::Precondition("grid denominator must be positive"));
    }
    let r = sys.r();
    let q = q as i64;
    let total = (q as u64).pow(r as u32);
    Ok((0..total).map(move |mut idx| {
        let a: Vec<i64> = (0..r)
            .map(|_| {
                let v = (idx % q as u64) as i64;
                idx /= q as u64;
                v
            })
            .collect();
        phi_grid(sys, &a, q)
    }))
}

/// Minimum of `Φ` over the grid `{a/Q : 0 ≤ a_s < Q}`; an upper bound on the
/// true minimum.
pub fn grid_oracle_min_phi(sys: &LinearFormSystem, q: u32) -> Result<i64> {
    Ok(grid_values(sys, q)?.min().expect("grid contains x = 0"))
}

/// Maximum of `Φ` over the same grid.
pub fn grid_oracle_max_phi(sys: &LinearFormSystem, q: u32) -> Result<i64> {
    Ok(grid_values(sys, q)?.max().expect("grid contains x = 0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{phi, validate_system};

    fn sys(c: &[Vec<i64>], d: &[Vec<i64>]) -> LinearFormSystem {
        validate_system(c, d).unwrap()
    }

    fn binomial() -> LinearFormSystem {
        sys(&[vec![2]], &[vec![1], vec![1]])
    }

    fn inverse() -> LinearFormSystem {
        sys(&[vec![1], vec![1]], &[vec![2]])
    }

    fn two_var() -> LinearFormSystem {
        sys(&[vec![1, 1]], &[vec![1, 0], vec![0, 1]])
    }

    #[test]
    fn signature_counts() {
        let b: Vec<_> = enumerate_signatures(&binomial()).collect();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|s| s.n == vec![0, 0]));
        let i: Vec<_> = enumerate_signatures(&inverse()).collect();
        assert_eq!(i.len(), 2);
        assert_eq!(i[0], CellSignature { m: vec![0, 0], n: vec![1] });
        assert_eq!(enumerate_signatures(&two_var()).count(), 2);
    }

    #[test]
    fn signatures_graded() {
        let s = sys(&[vec![2, 1], vec![1, 2]], &[vec![3, 0], vec![0, 3]]);
        let all: Vec<_> = enumerate_signatures(&s).collect();
        assert_eq!(all.len(), 3 * 3 * 3 * 3);
        assert!(all.windows(2).all(|w| w[0].value() <= w[1].value()));
    }

    #[test]
    fn feasibility_examples() {
        let v = cell_feasible(&binomial(), &CellSignature { m: vec![1], n: vec![0, 0] });
        let w = v.witness.unwrap();
        assert_eq!(w.coords()[0], num_rational::BigRational::new(1.into(), 2.into()));
        assert_eq!(phi(&binomial(), &w).unwrap(), 1);
        let z = cell_feasible(&binomial(), &CellSignature { m: vec![0], n: vec![0, 0] });
        assert_eq!(z.witness.unwrap().coords()[0], num_rational::BigRational::from_integer(0.into()));
        let t = cell_feasible(&two_var(), &CellSignature { m: vec![1], n: vec![0, 0] });
        let x = t.witness.unwrap();
        assert_eq!(phi(&two_var(), &x).unwrap(), 1);
    }

    #[test]
    fn infeasible_cell() {
        // n_1 = 1 needs x ≥ 1
        let s = sys(&[vec![2]], &[vec![1], vec![1]]);
        let v = cell_feasible(&s, &CellSignature { m: vec![0], n: vec![1, 0] });
        assert!(!v.feasible);
        assert!(v.witness.is_none());
    }

    #[test]
    fn min_phi_examples() {
        let b = min_phi(&binomial());
        assert_eq!((b.min_value, b.min_on_d), (0, Some(1)));
        let i = min_phi(&inverse());
        assert_eq!((i.min_value, i.min_on_d), (-1, Some(-1)));
        let t = min_phi(&two_var());
        assert_eq!((t.min_value, t.min_on_d), (0, Some(1)));
        for s in [binomial(), inverse(), two_var()] {
            let summary = min_phi(&s);
            assert_eq!(phi(&s, &summary.witness_point).unwrap(), summary.min_value);
        }
    }

    #[test]
    fn criteria_examples() {
        assert!(landau_holds(&binomial()));
        assert!(delaygue_holds(&binomial()).unwrap());
        assert!(!landau_holds(&inverse()));
        assert!(matches!(delaygue_holds(&inverse()), Err(Error::Precondition(_))));
        assert!(landau_holds(&two_var()));
        assert!(delaygue_holds(&two_var()).unwrap());
    }

    #[test]
    fn pruned_search_matches_plain_enumeration() {
        let s = sys(&[vec![2, 1], vec![1, 2]], &[vec![3, 0], vec![0, 3]]);
        let plain: Vec<_> = enumerate_signatures(&s)
            .filter(|sig| cell_feasible(&s, sig).feasible)
            .collect();
        let pruned: Vec<_> = feasible_cells(&s).into_iter().map(|c| c.signature).collect();
        assert_eq!(plain, pruned);
    }

    #[test]
    fn grid_oracle_examples() {
        assert_eq!(grid_oracle_min_phi(&binomial(), 2).unwrap(), 0);
        assert_eq!(grid_oracle_min_phi(&inverse(), 2).unwrap(), -1);
        for s in [binomial(), inverse(), two_var()] {
            assert_eq!(grid_oracle_min_phi(&s, 1).unwrap(), 0);
        }
        assert!(grid_oracle_min_phi(&binomial(), 0).is_err());
        assert_eq!(grid_oracle_max_phi(&binomial(), 2).unwrap(), 1);
    }
}
