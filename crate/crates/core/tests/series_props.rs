use nchilb_core::series::{functional_equation_residual, punctual_shifts, full_shifts, solve_functional_equation};
use nchilb_core::{LaurentPolynomial as L, TwistedSeries};
use proptest::prelude::*;

const ORDER: usize = 5;

fn coeff() -> impl Strategy<Value = L> {
    (-3i64..3, prop::collection::vec(-5i64..6, 0..4)).prop_map(|(e, c)| L::from_coeffs(e, c))
}

fn series(twist: u32) -> impl Strategy<Value = TwistedSeries<L>> {
    prop::collection::vec(coeff(), ORDER + 1).prop_map(move |c| TwistedSeries::new(twist, c))
}

fn unit_series(twist: u32) -> impl Strategy<Value = TwistedSeries<L>> {
    (series(twist), any::<bool>()).prop_map(move |(s, neg)| {
        let mut c = s.into_coeffs();
        c[0] = if neg { -L::q_pow(2) } else { L::q_pow(-1) };
        TwistedSeries::new(twist, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twisted_product_is_associative(w in 0u32..3, a in series(0), b in series(0), c in series(0)) {
        let (a, b, c) = (a.with_twist(w), b.with_twist(w), c.with_twist(w));
        let left = a.twisted_mul(&b).unwrap().twisted_mul(&c).unwrap();
        let right = a.twisted_mul(&b.twisted_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn transform_is_a_ring_isomorphism(w in 0u32..4, a in series(0), b in series(0)) {
        let (a, b) = (a.with_twist(w), b.with_twist(w));
        let lhs = a.twisted_mul(&b).unwrap().twist_transform();
        let rhs = a.twist_transform().ordinary_mul(&b.twist_transform());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.twist_transform().untwist_transform(w), a);
    }

    #[test]
    fn division_round_trip(a in series(0), b in unit_series(0)) {
        let prod = a.ordinary_mul(&b);
        prop_assert_eq!(prod.series_div(&b).unwrap(), a);
    }

    #[test]
    fn twisted_inverse_is_two_sided(w in 0u32..3, a in unit_series(0)) {
        let a = a.with_twist(w);
        let inv = a.twisted_inverse().unwrap();
        prop_assert_eq!(a.twisted_mul(&inv).unwrap(), TwistedSeries::one(w, ORDER));
        prop_assert_eq!(inv.twisted_mul(&a).unwrap(), TwistedSeries::one(w, ORDER));
    }

    #[test]
    fn scaling_is_multiplicative(a in series(0), b in series(0), e in -3i64..4) {
        prop_assert_eq!(
            a.ordinary_mul(&b).substitute_scale(e),
            a.substitute_scale(e).ordinary_mul(&b.substitute_scale(e))
        );
    }

    #[test]
    fn functional_equations_solve_exactly(m in 1u32..5, order in 0usize..8) {
        for shifts in [full_shifts(m), punctual_shifts(m)] {
            let g = solve_functional_equation(order, &shifts);
            let r = functional_equation_residual(&g, &shifts);
            prop_assert!(r.coeffs().iter().all(L::is_zero));
        }
    }
}
