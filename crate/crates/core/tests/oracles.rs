//! Library results against independent re-computations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ratiocert::cells::{cell_feasible, enumerate_signatures, min_phi};
use ratiocert::corpus::{generate_corpus, CorpusParams};
use ratiocert::elimination::HalfOpenPolyhedron;
use ratiocert::forms::{factorial_ratio, harmonic, phi, LinearFormSystem, RationalPoint};
use ratiocert::geometry::{box_scan_dilate, lattice_points_in_dilate, ConeGeometry};
use ratiocert::series::{
    integrality_report, series_f, series_g_c, series_g_d, TruncatedSeries,
};

fn systems(count: usize) -> Vec<LinearFormSystem> {
    generate_corpus(&CorpusParams { count, seed: 99, ..Default::default() })
        .iter()
        .map(|s| s.to_system().unwrap())
        .collect()
}

fn fact(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn form(row: &[i64], m: &[u64]) -> i64 {
    row.iter().zip(m).map(|(a, b)| a * *b as i64).sum()
}

#[test]
fn factorial_ratio_against_products() {
    for sys in systems(30) {
        for a in 0..6u64 {
            for b in 0..6u64 {
                let m: Vec<u64> = [a, b][..sys.r()].to_vec();
                let num = sys.c().iter().fold(BigInt::one(), |acc, r| acc * fact(form(r, &m)));
                let den = sys.d().iter().fold(BigInt::one(), |acc, r| acc * fact(form(r, &m)));
                assert_eq!(factorial_ratio(&sys, &m), BigRational::new(num, den));
            }
        }
    }
}

#[test]
fn harmonic_against_sum() {
    let mut h = BigRational::zero();
    for n in 1..40i64 {
        h += BigRational::new(BigInt::one(), n.into());
        assert_eq!(harmonic(n).unwrap(), h);
    }
    assert!(harmonic(0).is_err());
}

#[test]
fn g_series_against_definition() {
    for sys in systems(10) {
        let g = series_g_c(&sys, 1, 5).unwrap();
        let d = series_g_d(&sys, sys.k_count(), 5).unwrap();
        for (m, c) in g.terms() {
            let v = form(&sys.c()[0], m);
            let h = (1..=v).fold(BigRational::zero(), |acc, k| acc + BigRational::new(1.into(), k.into()));
            assert_eq!(*c, factorial_ratio(&sys, m) * h);
        }
        for (m, _) in d.terms() {
            assert_ne!(form(&sys.d()[sys.k_count() - 1], m), 0);
        }
    }
}

/// `exp(S) = Σ S^k / k!`, which terminates at `k = cap` for `S(0) = 0`.
fn exp_by_powers(s: &TruncatedSeries) -> TruncatedSeries {
    let mut total = TruncatedSeries::one(s.r(), s.cap());
    let mut power = TruncatedSeries::one(s.r(), s.cap());
    for k in 1..=s.cap() {
        power = power.mul(s).unwrap().scale(&BigRational::new(1.into(), (k as i64).into()));
        total = total.add(&power).unwrap();
    }
    total
}

#[test]
fn mirror_exp_against_power_sum() {
    for sys in systems(12) {
        let f = series_f(&sys, 6);
        let g = series_g_c(&sys, 1, 6).unwrap();
        let q = g.divide(&f).unwrap();
        assert_eq!(q.mul(&f).unwrap(), g);
        let e = q.exp().unwrap();
        assert_eq!(e, exp_by_powers(&q));
        assert_eq!(e.log().unwrap(), q);
    }
}

#[test]
fn f_integrality_matches_landau() {
    for sys in systems(60) {
        let integral = integrality_report(&series_f(&sys, 8), None).unwrap().all_integral;
        if min_phi(&sys).landau_holds() {
            assert!(integral);
        }
    }
}

#[test]
fn phi_minimum_against_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for sys in systems(40) {
        let summary = min_phi(&sys);
        assert_eq!(phi(&sys, &summary.witness_point).unwrap(), summary.min_value);
        for _ in 0..200 {
            let q = rng.gen_range(1..40i64);
            let nums: Vec<i64> = (0..sys.r()).map(|_| rng.gen_range(0..q)).collect();
            let x = RationalPoint::from_fractions(&nums, q).unwrap();
            assert!(phi(&sys, &x).unwrap() >= summary.min_value);
        }
    }
}

#[test]
fn cell_minimum_against_full_enumeration() {
    for sys in systems(25) {
        let best = enumerate_signatures(&sys)
            .filter(|s| cell_feasible(&sys, s).feasible)
            .map(|s| s.value())
            .min()
            .unwrap();
        assert_eq!(best, min_phi(&sys).min_value);
    }
}

/// Interior of the cone without the facet list: `u = Σ μ_i a_i` with every
/// `μ_i > 0`. With `μ_{n+s} = w_s`, the first `n` multipliers are
/// `u − Σ w_s a_{n+s}`, so the test is strict feasibility in `w`.
fn interior_by_multipliers(geom: &ConeGeometry, u: &[i64]) -> bool {
    let (r, n) = (geom.config.r(), geom.config.dim());
    let mut poly = HalfOpenPolyhedron::new(r);
    for s in 0..r {
        let mut row = vec![0; r];
        row[s] = 1;
        poly.add_strict(&row, 0);
    }
    for c in 0..n {
        let row: Vec<i64> = (0..r).map(|s| -geom.config.points()[n + s][c]).collect();
        poly.add_strict(&row, -u[c]);
    }
    poly.is_feasible()
}

#[test]
fn interior_test_against_multipliers() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for sys in systems(30) {
        let geom = ConeGeometry::of_system(&sys).unwrap();
        let n = geom.config.dim();
        for _ in 0..150 {
            let u: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=4)).collect();
            assert_eq!(geom.facets.is_interior(&u), interior_by_multipliers(&geom, &u), "{u:?}");
        }
        for p in lattice_points_in_dilate(&geom, (sys.j_count() + sys.r() + 1) as i64, false) {
            assert_eq!(p.interior, interior_by_multipliers(&geom, &p.u));
        }
    }
}

#[test]
fn dilate_enumeration_against_box_scan() {
    let small: Vec<_> = systems(80)
        .into_iter()
        .filter(|s| s.r() + s.j_count() + s.k_count() <= 5)
        .take(12)
        .collect();
    assert!(small.len() >= 5);
    for sys in small {
        let geom = ConeGeometry::of_system(&sys).unwrap();
        for z in 0..=(sys.j_count() + sys.r()) as i64 {
            assert_eq!(lattice_points_in_dilate(&geom, z, false), box_scan_dilate(&geom, z, false));
            assert_eq!(lattice_points_in_dilate(&geom, z, true), box_scan_dilate(&geom, z, true));
        }
    }
}
