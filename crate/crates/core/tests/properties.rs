mod common;

use common::suites;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toric_core::cox::{dehomogenize, homogenize};
use toric_core::divisors::{class_group, is_cartier, principal_divisor, Divisor};
use toric_core::fans::Fan;
use toric_core::ideals::LaurentPolynomial;
use toric_core::zlattice::{hnf, snf, IntegerMatrix};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn hirzebruch(a: i64) -> Fan {
    Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn cone_biduality(seed in any::<u64>()) {
        suites::cone_biduality(&mut rng(seed)).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn lattice_points_match_box_scan(seed in any::<u64>()) {
        suites::lattice_points_polygon(&mut rng(seed)).map_err(TestCaseError::fail)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn ehrhart_predicts_unseen_dilates(seed in any::<u64>()) {
        suites::ehrhart_out_of_sample(&mut rng(seed)).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn tetrahedron_lattice_points(seed in any::<u64>()) {
        suites::lattice_points_simplex(&mut rng(seed)).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn mixed_volume_symmetric_and_multilinear(seed in any::<u64>()) {
        suites::mixed_volume_laws(&mut rng(seed)).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn polytope_divisor_round_trip(seed in any::<u64>()) {
        suites::polytope_divisor_round_trip(&mut rng(seed)).map_err(TestCaseError::fail)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn principal_divisors_have_trivial_class(a in 0i64..4, m in prop::collection::vec(-5i64..=5, 2)) {
        let f = hirzebruch(a);
        let m: Vec<BigInt> = m.into_iter().map(BigInt::from).collect();
        let d = principal_divisor(&f, &m).unwrap();
        prop_assert!(class_group(&f).is_zero_class(&d));
    }

    #[test]
    fn smooth_complete_fans_make_every_divisor_cartier(a in 0i64..4, c in prop::collection::vec(-6i64..=6, 4)) {
        prop_assert!(is_cartier(&hirzebruch(a), &Divisor::from_i64(&c)));
    }

    /// Homogenizing with respect to `D_P` then dehomogenizing on a chart gives back the
    /// polynomial up to the chart's monomial shift.
    #[test]
    fn homogenization_round_trip(seed in any::<u64>(), cone in 0usize..3) {
        let (pts, h) = common::random_polygon(&mut rng(seed), 2);
        let support: Vec<Vec<BigInt>> = pts.iter().map(|p| common::big(p)).collect();
        let f = LaurentPolynomial::from_support(2, &support).unwrap();
        let p = toric_core::polytopes::LatticePolytope::hull(2, &support).unwrap();
        let fan = toric_core::fans::normal_fan(&p).unwrap();
        let d = toric_core::divisors::polytope_divisor(&p, &fan).unwrap();
        let hom = homogenize(&fan, &f, &d).unwrap();
        let cone = cone % fan.max_cones().len();
        let back = dehomogenize(&fan, &hom, &d, cone).unwrap();
        let v = toric_core::cox::chart_character(&fan, &d, cone).unwrap();
        prop_assert_eq!(back.terms().len(), f.terms().len(), "{:?}", h);
        for m in f.terms().keys() {
            let shifted = toric_core::zlattice::sub_vec(m, &v);
            prop_assert!(back.terms().contains_key(&shifted));
        }
    }

    /// `M·U = H` and `U·M·V = S` with `S` diagonal and each entry dividing the next.
    #[test]
    fn normal_forms_are_consistent(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..4)) {
        let r: Vec<&[i64]> = rows.iter().map(|v| v.as_slice()).collect();
        let m = IntegerMatrix::from_i64_rows(&r);
        let (h, u) = hnf(&m);
        prop_assert_eq!(m.mul(&u), h);
        let (s, u, v) = snf(&m);
        prop_assert_eq!(u.mul(&m).mul(&v), s.clone());
        let diag: Vec<BigInt> = (0..s.rows().min(s.cols())).map(|i| s[(i, i)].clone()).collect();
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                if i != j {
                    prop_assert_eq!(&s[(i, j)], &BigInt::from(0));
                }
            }
        }
        for w in diag.windows(2) {
            if w[0] != BigInt::from(0) {
                prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
            } else {
                prop_assert_eq!(&w[1], &BigInt::from(0));
            }
        }
    }
}

#[test]
fn invalid_fans_are_rejected() {
    for (what, res) in suites::invalid_fans() {
        assert!(res.is_err(), "accepted a fan with {what}");
    }
}
