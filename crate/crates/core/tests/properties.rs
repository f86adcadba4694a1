use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use ratiocert::cells::min_phi;
use ratiocert::corpus::{generate_corpus, CorpusParams};
use ratiocert::forms::{phi, validate_system, LinearFormSystem, RationalPoint};
use ratiocert::geometry::{build_configuration, swap_map};
use ratiocert::hypergeom::{bracket, lattice_element};
use ratiocert::series::TruncatedSeries;

const CAP: u64 = 4;

fn series_strategy(r: usize, constant: Option<i64>) -> impl Strategy<Value = TruncatedSeries> {
    let width = if r == 1 { CAP as usize + 1 } else { 15 }; // C(CAP + r, r)
    prop::collection::vec((-3i64..=3, 1i64..=3), width).prop_map(move |coeffs| {
        let exps: Vec<Vec<u64>> = (0..=CAP)
            .flat_map(|d| (0..=d).map(move |a| if r == 1 { vec![d] } else { vec![a, d - a] }))
            .take(width)
            .collect();
        let mut s = TruncatedSeries::from_terms(
            r,
            CAP,
            exps.into_iter().zip(coeffs).map(|(m, (n, d))| (m, BigRational::new(n.into(), d.into()))),
        );
        if let Some(c) = constant {
            s.set(&vec![0; r], BigRational::from_integer(c.into()));
        }
        s
    })
}

fn pair(r: usize) -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    (series_strategy(r, None), series_strategy(r, None), series_strategy(r, None))
}

fn corpus_system() -> impl Strategy<Value = LinearFormSystem> {
    (0u64..1000).prop_map(|seed| {
        generate_corpus(&CorpusParams { count: 1, seed, ..Default::default() })[0].to_system().unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws((a, b, c) in (1usize..=2).prop_flat_map(pair)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_empty());
        prop_assert_eq!(a.mul(&TruncatedSeries::one(a.r(), CAP)).unwrap(), a);
    }

    #[test]
    fn divide_undoes_multiply(
        (a, b) in (1usize..=2).prop_flat_map(|r| (series_strategy(r, None), series_strategy(r, Some(2))))
    ) {
        prop_assert_eq!(a.mul(&b).unwrap().divide(&b).unwrap(), a);
    }

    #[test]
    fn exp_is_a_homomorphism(
        (a, b) in (1usize..=2).prop_flat_map(|r| (series_strategy(r, Some(0)), series_strategy(r, Some(0))))
    ) {
        let lhs = a.add(&b).unwrap().exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
    }

    #[test]
    fn canonical_text_round_trips(a in (1usize..=2).prop_flat_map(|r| series_strategy(r, None))) {
        let text = a.to_canonical_text();
        prop_assert_eq!(TruncatedSeries::parse_canonical_text(a.r(), CAP, &text).unwrap(), a);
    }

    #[test]
    fn bracket_inverts_its_reflection(z in -12i64..12, k in 1i64..8) {
        // [z]_k [z+k]_{−k} = 1 whenever [z]_k is defined
        if let Ok(b) = bracket(z, k) {
            prop_assert_eq!(b * bracket(z + k, -k).unwrap(), BigRational::one());
        } else {
            prop_assert!(z < 0 && z + k >= 0);
        }
    }

    #[test]
    fn lattice_is_additive(sys in corpus_system(), p in prop::collection::vec(-4i64..=4, 2), q in prop::collection::vec(-4i64..=4, 2)) {
        let a = build_configuration(&sys).unwrap();
        let r = sys.r();
        let (p, q) = (&p[..r], &q[..r]);
        let sum: Vec<i64> = p.iter().zip(q).map(|(x, y)| x + y).collect();
        let lp = lattice_element(&a, p).l;
        let lq = lattice_element(&a, q).l;
        let expect: Vec<i64> = lp.iter().zip(&lq).map(|(x, y)| x + y).collect();
        prop_assert_eq!(lattice_element(&a, &sum).l, expect);
    }

    #[test]
    fn phi_never_below_minimum(sys in corpus_system(), q in 1i64..60, nums in prop::collection::vec(0i64..60, 2)) {
        let nums: Vec<i64> = nums[..sys.r()].iter().map(|n| n % q).collect();
        let x = RationalPoint::from_fractions(&nums, q).unwrap();
        prop_assert!(phi(&sys, &x).unwrap() >= min_phi(&sys).min_value);
    }

    #[test]
    fn swap_map_is_an_involution(sys in corpus_system(), u in prop::collection::vec(-5i64..=5, 8)) {
        let n = sys.r() + sys.j_count() + sys.k_count();
        let u = &u[..n];
        let v = swap_map(&sys, u);
        prop_assert_eq!(v.iter().sum::<i64>(), u.iter().sum::<i64>());
        prop_assert_eq!(swap_map(&sys.swapped(), &v), u.to_vec());
    }

    #[test]
    fn swapping_preserves_validity(sys in corpus_system()) {
        prop_assert!(validate_system(sys.d(), sys.c()).is_ok());
    }

    #[test]
    fn unbalanced_columns_are_rejected(sys in corpus_system(), bump in 1i64..3) {
        let mut c = sys.c().to_vec();
        c[0][0] += bump;
        prop_assert!(validate_system(&c, sys.d()).is_err());
    }
}
