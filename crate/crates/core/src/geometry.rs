//! The point configuration `A ⊂ Z^n` attached to a linear-form system, the
//! facets of the cone it generates, and lattice points of the dilates
//! `zΔ(A)` of `Δ(A) = conv(A ∪ {0})`.
//!
//! With `n = r + J + K`, the configuration is the standard basis
//! `a_1, …, a_n` followed by, for each variable `s`,
//! `a_{n+s} = (e_s, c_{1s}, …, c_{Js}, −d_{1s}, …, −d_{Ks})`. Every point has
//! coordinate sum 1, so a point `u` of the cone lies in `zΔ(A)` exactly when
//! `Σu_i ≤ z`, and in its interior exactly when it is interior to the cone
//! and `Σu_i < z`.

use serde::Serialize;

use crate::elimination::HalfOpenPolyhedron;
use crate::error::{Error, Result};
use crate::forms::{
    eval_int, find_witness_adaptive, validate_with_width, LinearFormSystem, RatioWitness,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    r: usize,
    j: usize,
    k: usize,
    points: Vec<Vec<i64>>,
}

impl PointConfiguration {
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn j_count(&self) -> usize {
        self.j
    }
    pub fn k_count(&self) -> usize {
        self.k
    }
    /// Ambient dimension `n = r + J + K`.
    pub fn dim(&self) -> usize {
        self.r + self.j + self.k
    }
    /// The points `a_1, …, a_N`, `N = n + r`.
    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }
    /// `a_i` with the 1-based index used throughout the literature.
    pub fn point(&self, i: usize) -> &[i64] {
        &self.points[i - 1]
    }
}

pub fn build_configuration(sys: &LinearFormSystem) -> Result<PointConfiguration> {
    let (r, j, k) = (sys.r(), sys.j_count(), sys.k_count());
    let n = r + j + k;
    let mut points: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    for s in 0..r {
        let mut a = vec![0; n];
        a[s] = 1;
        for (jj, row) in sys.c().iter().enumerate() {
            a[r + jj] = row[s];
        }
        for (kk, row) in sys.d().iter().enumerate() {
            a[r + j + kk] = -row[s];
        }
        points.push(a);
    }
    for (i, p) in points.iter().enumerate() {
        debug_assert_eq!(p.iter().sum::<i64>(), 1, "a_{} off the unit-sum hyperplane", i + 1);
        if let Some(dup) = points[..i].iter().position(|q| q == p) {
            return Err(Error::DistinctnessViolation(dup + 1, i + 1));
        }
    }
    Ok(PointConfiguration { r, j, k, points })
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inward facet normals of the cone `C(A)`; `u ∈ C(A)` iff `h·u ≥ 0` for all.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeFacets {
    pub normals: Vec<Vec<i64>>,
}

impl ConeFacets {
    pub fn contains(&self, u: &[i64]) -> bool {
        self.normals.iter().all(|h| dot(h, u) >= 0)
    }

    pub fn is_interior(&self, u: &[i64]) -> bool {
        self.normals.iter().all(|h| dot(h, u) > 0)
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }
}

/// Facets of the cone over `generators` by the double-description method.
///
/// The first `n` generators must be the standard basis (true for every
/// configuration built here), which seeds the iteration with the orthant.
/// Adjacency of a positive and a negative facet is decided combinatorially:
/// no third facet may vanish on every generator the pair vanishes on.
pub fn facets_of_cone(generators: &[Vec<i64>], n: usize) -> Result<ConeFacets> {
    let mut facets: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            let mut e = vec![0i128; n];
            e[i] = 1;
            e
        })
        .collect();
    let wide: Vec<Vec<i128>> = generators.iter().map(|g| g.iter().map(|&v| v as i128).collect()).collect();
    let dot128 = |h: &[i128], g: &[i128]| -> i128 { h.iter().zip(g).map(|(a, b)| a * b).sum() };

    for added in n..wide.len() {
        let g = &wide[added];
        let seen = &wide[..added];
        let vals: Vec<i128> = facets.iter().map(|h| dot128(h, g)).collect();
        let zero_sets: Vec<Vec<bool>> = facets
            .iter()
            .map(|h| seen.iter().map(|p| dot128(h, p) == 0).collect())
            .collect();
        let mut next: Vec<Vec<i128>> = Vec::new();
        for (idx, h) in facets.iter().enumerate() {
            if vals[idx] >= 0 {
                next.push(h.clone());
            }
        }
        for pos in (0..facets.len()).filter(|&i| vals[i] > 0) {
            for neg in (0..facets.len()).filter(|&i| vals[i] < 0) {
                let common: Vec<bool> =
                    zero_sets[pos].iter().zip(&zero_sets[neg]).map(|(a, b)| *a && *b).collect();
                let blocked = (0..facets.len()).any(|o| {
                    o != pos
                        && o != neg
                        && common.iter().zip(&zero_sets[o]).all(|(c, z)| !*c || *z)
                });
                if blocked {
                    continue;
                }
                let (hp, hn) = (&facets[pos], &facets[neg]);
                let (vp, vn) = (vals[pos], -vals[neg]);
                let mut h: Vec<i128> = hp.iter().zip(hn).map(|(a, b)| vp * b + vn * a).collect();
                let g = h.iter().fold(0, |acc, &x| gcd(acc, x));
                if g > 1 {
                    h.iter_mut().for_each(|x| *x /= g);
                }
                if h.iter().any(|x| x.abs() > i64::MAX as i128 / 4) {
                    return Err(Error::Overflow("facet enumeration"));
                }
                next.push(h);
            }
        }
        next.sort();
        next.dedup();
        facets = next;
    }
    let mut normals: Vec<Vec<i64>> =
        facets.into_iter().map(|h| h.into_iter().map(|x| x as i64).collect()).collect();
    normals.sort();
    Ok(ConeFacets { normals })
}

pub fn cone_facets(config: &PointConfiguration) -> Result<ConeFacets> {
    facets_of_cone(config.points(), config.dim())
}

/// A configuration together with the facets of its cone.
#[derive(Clone, Debug)]
pub struct ConeGeometry {
    pub config: PointConfiguration,
    pub facets: ConeFacets,
}

impl ConeGeometry {
    pub fn new(config: PointConfiguration) -> Result<Self> {
        let facets = cone_facets(&config)?;
        Ok(ConeGeometry { config, facets })
    }

    pub fn of_system(sys: &LinearFormSystem) -> Result<Self> {
        Self::new(build_configuration(sys)?)
    }

    /// `Σ_{i ≤ J+r} a_i = (1, …, 1, 0, …, 0)`.
    pub fn distinguished_point(&self) -> Vec<i64> {
        let c = &self.config;
        let mut u = vec![1; c.r + c.j];
        u.resize(c.dim(), 0);
        u
    }
}

pub fn is_interior(geom: &ConeGeometry, u: &[i64]) -> bool {
    geom.facets.is_interior(u)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub u: Vec<i64>,
    pub coordinate_sum: i64,
    pub interior: bool,
}

/// Lattice points of `zΔ(A)` (or of its interior when `interior_only`).
pub fn lattice_points_in_dilate(geom: &ConeGeometry, z: i64, interior_only: bool) -> Vec<LatticePoint> {
    let max_sum = if interior_only { z - 1 } else { z };
    if max_sum < 0 {
        return Vec::new();
    }
    let mut out: Vec<LatticePoint> = cone_points_up_to(&geom.config, max_sum)
        .into_iter()
        .map(|u| LatticePoint {
            coordinate_sum: u.iter().sum(),
            interior: geom.facets.is_interior(&u),
            u,
        })
        .filter(|p| !interior_only || p.interior)
        .collect();
    out.sort();
    out
}

/// Lower bound that coordinate `c` of a cone point imposes in terms of the
/// weights `w` on `a_{n+1}, …, a_{n+r}`: `u = y + Σ w_s a_{n+s}` with `y ≥ 0`
/// gives `u_c ≥ (Σ w_s a_{n+s})_c`.
fn coordinate_row(config: &PointConfiguration, c: usize) -> Vec<i64> {
    let n = config.dim();
    (0..config.r).map(|s| config.points[n + s][c]).collect()
}

/// Every lattice point `u` of the cone with `Σu ≤ max_sum`.
///
/// Coordinates are fixed one at a time; the admissible integer range for the
/// next one is the exact projection of the remaining real relaxation, in the
/// variables `(w, t)`, onto `t`.
pub fn cone_points_up_to(config: &PointConfiguration, max_sum: i64) -> Vec<Vec<i64>> {
    let n = config.dim();
    let rows: Vec<Vec<i64>> = (0..n).map(|c| coordinate_row(config, c)).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    sweep(config.r, &rows, max_sum, &mut prefix, &mut out);
    out
}

fn sweep(r: usize, rows: &[Vec<i64>], max_sum: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let n = rows.len();
    let c = prefix.len();
    if c == n {
        out.push(prefix.clone());
        return;
    }
    // variables: w_0 … w_{r-1}, t
    let dim = r + 1;
    let mut poly = HalfOpenPolyhedron::new(dim);
    let mut row = vec![0i64; dim];
    for s in 0..r {
        row.iter_mut().for_each(|v| *v = 0);
        row[s] = 1;
        poly.add_weak(&row, 0);
    }
    for (fixed, &u) in prefix.iter().enumerate() {
        // u_fixed − L_fixed(w) ≥ 0
        row.iter_mut().for_each(|v| *v = 0);
        for s in 0..r {
            row[s] = -rows[fixed][s];
        }
        poly.add_weak(&row, -u);
    }
    // t − L_c(w) ≥ 0
    row.iter_mut().for_each(|v| *v = 0);
    for s in 0..r {
        row[s] = -rows[c][s];
    }
    row[r] = 1;
    poly.add_weak(&row, 0);
    // Σ prefix + t + Σ_{later} L(w) ≤ max_sum
    row.iter_mut().for_each(|v| *v = 0);
    for later in rows.iter().skip(c + 1) {
        for s in 0..r {
            row[s] -= later[s];
        }
    }
    row[r] = -1;
    let fixed_sum: i64 = prefix.iter().sum();
    poly.add_weak(&row, fixed_sum - max_sum);

    let Some(range) = poly.interval_of(r) else { return };
    let (Some(lo), Some(hi)) = (range.min_integer(), range.max_integer()) else {
        unreachable!("coordinate ranges are bounded for balanced systems")
    };
    let lo = i64::try_from(lo).expect("coordinate fits in i64");
    let hi = i64::try_from(hi).expect("coordinate fits in i64");
    for t in lo..=hi {
        prefix.push(t);
        sweep(r, rows, max_sum, prefix, out);
        prefix.pop();
    }
}

/// Reference enumeration: scan the box spanned by `z·(A ∪ {0})` and filter by
/// the facet inequalities. Only practical for small instances.
pub fn box_scan_dilate(geom: &ConeGeometry, z: i64, interior_only: bool) -> Vec<LatticePoint> {
    let n = geom.config.dim();
    let lo: Vec<i64> = (0..n)
        .map(|c| z * geom.config.points.iter().map(|p| p[c]).min().unwrap().min(0))
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|c| z * geom.config.points.iter().map(|p| p[c]).max().unwrap().max(0))
        .collect();
    let mut out = Vec::new();
    let mut u = lo.clone();
    loop {
        let sum: i64 = u.iter().sum();
        let inside = if interior_only {
            sum < z && geom.facets.is_interior(&u)
        } else {
            sum <= z && geom.facets.contains(&u)
        };
        if inside {
            out.push(LatticePoint { u: u.clone(), coordinate_sum: sum, interior: geom.facets.is_interior(&u) });
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                out.sort();
                return out;
            }
            pos -= 1;
            if u[pos] < hi[pos] {
                u[pos] += 1;
                break;
            }
            u[pos] = lo[pos];
        }
    }
}

/// `(J+r)Δ(A)` has no interior lattice point.
pub fn landau_dilate_is_hollow(geom: &ConeGeometry) -> bool {
    let c = &geom.config;
    lattice_points_in_dilate(geom, (c.j + c.r) as i64, true).is_empty()
}

/// `Σ_{i ≤ J+r} a_i` is the only interior lattice point of `(J+r+1)Δ(A)`.
pub fn distinguished_point_is_unique(geom: &ConeGeometry) -> bool {
    let c = &geom.config;
    let pts = lattice_points_in_dilate(geom, (c.j + c.r + 1) as i64, true);
    pts.len() == 1 && pts[0].u == geom.distinguished_point()
}

/// Minimum coordinate sum over interior lattice points of the cone.
///
/// The distinguished point is always interior with sum `J + r`, so
/// enumerating the interior of `(J+r+1)Δ(A)` suffices. `None` only if that
/// enumeration is empty, which a valid system never produces.
pub fn min_interior_sum(geom: &ConeGeometry) -> Option<i64> {
    let c = &geom.config;
    lattice_points_in_dilate(geom, (c.j + c.r + 1) as i64, true)
        .iter()
        .map(|p| p.coordinate_sum)
        .min()
}

/// Summary of the interior lattice points of `zΔ(A)` for `z = 0, …, J+r+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DilateSummary {
    /// `interior_counts[z]` = number of interior lattice points of `zΔ(A)`.
    pub interior_counts: Vec<usize>,
    pub hollow_landau_dilate: bool,
    pub unique_interior_point: bool,
    pub min_interior_sum: Option<i64>,
    pub facet_count: usize,
}

/// All dilate statistics from a single enumeration.
pub fn dilate_summary(geom: &ConeGeometry) -> DilateSummary {
    let c = &geom.config;
    let top = (c.j + c.r + 1) as i64;
    let pts = lattice_points_in_dilate(geom, top, true);
    let interior_counts = (0..=top).map(|z| pts.iter().filter(|p| p.coordinate_sum < z).count()).collect();
    let level = (c.j + c.r) as i64;
    DilateSummary {
        interior_counts,
        hollow_landau_dilate: pts.iter().all(|p| p.coordinate_sum >= level),
        unique_interior_point: pts.len() == 1 && pts[0].u == geom.distinguished_point(),
        min_interior_sum: pts.iter().map(|p| p.coordinate_sum).min(),
        facet_count: geom.facets.len(),
    }
}

/// `Σ_s a_s + Σ_j C_j(1,…,1) a_{r+j}`, which also equals
/// `Σ_k D_k(1,…,1) a_{r+J+k} + Σ_s a_{n+s}` and involves every point of `A`
/// with positive weight on one side or the other.
pub fn balanced_relation_point(config: &PointConfiguration) -> Vec<i64> {
    let n = config.dim();
    let mut u = vec![0i64; n];
    u[..config.r].iter_mut().for_each(|x| *x = 1);
    for jj in 0..config.j {
        u[config.r + jj] = (0..config.r).map(|s| config.points[n + s][config.r + jj]).sum();
    }
    u
}

/// `Σ_k a_{r+J+k} + Σ_s a_{n+s}`, an interior point with coordinate sum `K + r`.
pub fn denominator_side_point(config: &PointConfiguration) -> Vec<i64> {
    let n = config.dim();
    let mut u = vec![0i64; n];
    for kk in 0..config.k {
        u[config.r + config.j + kk] += 1;
    }
    for s in 0..config.r {
        for (x, a) in u.iter_mut().zip(&config.points[n + s]) {
            *x += a;
        }
    }
    u
}

/// The system with numerator and denominator forms exchanged.
pub fn swap_system(sys: &LinearFormSystem) -> Result<LinearFormSystem> {
    let swapped = sys.swapped();
    validate_with_width(swapped.r(), swapped.c(), swapped.d())
}

/// Unimodular map carrying `A` onto the configuration `A'` of the swapped
/// system, preserving coordinate sums:
/// `e_s ↦ a'_{n+s}`, `e_{r+j} ↦ e_{r+K+j}`, `e_{r+J+k} ↦ e_{r+k}`,
/// `a_{n+s} ↦ e_s`.
pub fn swap_map(sys: &LinearFormSystem, u: &[i64]) -> Vec<i64> {
    let (r, j, k) = (sys.r(), sys.j_count(), sys.k_count());
    let head = &u[..r];
    let mut v = vec![0i64; r + j + k];
    v[..r].copy_from_slice(head);
    for kk in 0..k {
        v[r + kk] = u[r + j + kk] + eval_int(&sys.d()[kk], head);
    }
    for jj in 0..j {
        v[r + k + jj] = u[r + jj] - eval_int(&sys.c()[jj], head);
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CountVerdict {
    /// `K > J`: nothing is predicted.
    NoPrediction,
    /// `K ≤ J` and a non-integral ratio was found.
    NonIntegralWitness { bound: u64, witness: RatioWitness },
    /// `K ≤ J` but the search reached its cap without a witness.
    WitnessNotFound { bound: u64 },
}

/// When `K ≤ J` some `E(m)` must be non-integral; searches for it with boxes
/// `start, 2·start, …` up to `cap`.
pub fn denominator_count_check(sys: &LinearFormSystem, start: u64, cap: u64) -> CountVerdict {
    if sys.k_count() > sys.j_count() {
        return CountVerdict::NoPrediction;
    }
    match find_witness_adaptive(sys, start, cap) {
        (bound, Some(witness)) => CountVerdict::NonIntegralWitness { bound, witness },
        (bound, None) => CountVerdict::WitnessNotFound { bound },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::validate_system;

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
    fn configuration_examples() {
        let a = build_configuration(&binomial()).unwrap();
        assert_eq!((a.dim(), a.points().len()), (4, 5));
        assert_eq!(a.point(5), &[1, 2, -1, -1]);
        let b = build_configuration(&inverse()).unwrap();
        assert_eq!(b.point(5), &[1, 1, 1, -2]);
        assert!(a.points().iter().all(|p| p.iter().sum::<i64>() == 1));
    }

    #[test]
    fn facets_are_valid() {
        let g = ConeGeometry::of_system(&binomial()).unwrap();
        for h in &g.facets.normals {
            assert!(g.config.points().iter().all(|a| dot(h, a) >= 0));
        }
        // a_5 spans an extreme ray
        assert!(!g.facets.is_interior(&[1, 2, -1, -1]));
        let v = balanced_relation_point(&g.config);
        assert_eq!(v, vec![1, 2, 0, 0]);
        assert!(g.facets.is_interior(&v));
    }

    #[test]
    fn interior_examples() {
        let g = ConeGeometry::of_system(&binomial()).unwrap();
        assert!(!is_interior(&g, &[0, 0, 0, 0]));
        assert!(is_interior(&g, &[1, 1, 0, 0]));
        assert!(!is_interior(&g, &[1, 0, 0, 0]));
    }

    #[test]
    fn dilate_examples() {
        let g = ConeGeometry::of_system(&binomial()).unwrap();
        let zero = lattice_points_in_dilate(&g, 0, false);
        assert_eq!(zero.len(), 1);
        assert!(!zero[0].interior);
        assert!(lattice_points_in_dilate(&g, 0, true).is_empty());
        assert!(lattice_points_in_dilate(&g, 2, true).is_empty());
        let three = lattice_points_in_dilate(&g, 3, true);
        assert_eq!(three.iter().map(|p| p.u.clone()).collect::<Vec<_>>(), vec![vec![1, 1, 0, 0]]);
    }

    #[test]
    fn sweep_matches_box_scan() {
        for s in [binomial(), inverse(), two_var()] {
            let g = ConeGeometry::of_system(&s).unwrap();
            for z in 0..=3 {
                for interior in [false, true] {
                    assert_eq!(
                        lattice_points_in_dilate(&g, z, interior),
                        box_scan_dilate(&g, z, interior),
                        "z={z} interior={interior}"
                    );
                }
            }
        }
    }

    #[test]
    fn criteria_examples() {
        let b = ConeGeometry::of_system(&binomial()).unwrap();
        assert!(landau_dilate_is_hollow(&b));
        assert!(distinguished_point_is_unique(&b));
        assert_eq!(b.distinguished_point(), vec![1, 1, 0, 0]);
        let i = ConeGeometry::of_system(&inverse()).unwrap();
        assert!(!landau_dilate_is_hollow(&i));
        assert!(!distinguished_point_is_unique(&i));
        let p = denominator_side_point(&i.config);
        assert_eq!(p.iter().sum::<i64>(), 2);
        assert!(i.facets.is_interior(&p));
    }

    #[test]
    fn min_sum_examples() {
        assert_eq!(min_interior_sum(&ConeGeometry::of_system(&binomial()).unwrap()), Some(2));
        assert_eq!(min_interior_sum(&ConeGeometry::of_system(&inverse()).unwrap()), Some(2));
        assert_eq!(min_interior_sum(&ConeGeometry::of_system(&two_var()).unwrap()), Some(3));
        let s = dilate_summary(&ConeGeometry::of_system(&binomial()).unwrap());
        assert_eq!(s.interior_counts, vec![0, 0, 0, 1]);
        assert!(s.hollow_landau_dilate && s.unique_interior_point);
    }

    #[test]
    fn swap_examples() {
        let s = swap_system(&binomial()).unwrap();
        assert_eq!(s, inverse());
        assert_eq!(swap_system(&s).unwrap(), binomial());
        let sw = binomial().swapped();
        let a = build_configuration(&binomial()).unwrap();
        let b = build_configuration(&sw).unwrap();
        let mut image: Vec<_> = a.points().iter().map(|p| swap_map(&binomial(), p)).collect();
        let mut target = b.points().to_vec();
        image.sort();
        target.sort();
        assert_eq!(image, target);
    }

    #[test]
    fn count_check_examples() {
        match denominator_count_check(&inverse(), 8, 64) {
            CountVerdict::NonIntegralWitness { witness, .. } => assert_eq!(witness.m, vec![1]),
            other => panic!("{other:?}"),
        }
        assert_eq!(denominator_count_check(&binomial(), 8, 64), CountVerdict::NoPrediction);
        assert_eq!(denominator_count_check(&two_var(), 8, 64), CountVerdict::NoPrediction);
    }

    fn rank(rows: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        use num_traits::Zero;
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[rank][c];
                    let pivot = m[rank].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn facets_are_supported_by_hyperplanes() {
        let wider = sys(&[vec![2, 1], vec![1, 2]], &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 1]]);
        for s in [binomial(), inverse(), two_var(), wider] {
            let g = ConeGeometry::of_system(&s).unwrap();
            let n = g.config.dim();
            for h in &g.facets.normals {
                assert_eq!(h.iter().fold(0i128, |a, &x| gcd(a, x as i128)), 1);
                let tight: Vec<Vec<i64>> =
                    g.config.points().iter().filter(|a| dot(h, a) == 0).cloned().collect();
                assert_eq!(rank(&tight), n - 1, "{h:?}");
            }
        }
    }
}
