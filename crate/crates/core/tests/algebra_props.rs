use nchilb_core::{LaurentPolynomial as L, Poly, RationalFunction as Rf};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = L> {
    (-4i64..4, prop::collection::vec(-9i64..10, 0..6)).prop_map(|(e, c)| L::from_coeffs(e, c))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..7, 0..5).prop_map(|c| Poly::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, L::zero());
        prop_assert_eq!(&a * &L::one(), a.clone());
    }

    #[test]
    fn reciprocal_is_an_involution(a in laurent(), s in -6i64..6) {
        prop_assert_eq!(a.reciprocal(s).reciprocal(s), a);
    }

    #[test]
    fn reciprocal_is_multiplicative(a in laurent(), b in laurent(), s in -3i64..3, t in -3i64..3) {
        prop_assert_eq!((&a * &b).reciprocal(s + t), &a.reciprocal(s) * &b.reciprocal(t));
    }

    #[test]
    fn substitution_is_a_ring_map(a in laurent(), b in laurent(), w in 1i64..4) {
        prop_assert_eq!((&a * &b).substitute_power(w), &a.substitute_power(w) * &b.substitute_power(w));
        prop_assert_eq!((&a + &b).substitute_power(w), &a.substitute_power(w) + &b.substitute_power(w));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent(), n in 1i64..5, dn in 1i64..4) {
        let x = BigRational::new(BigInt::from(n), BigInt::from(dn));
        let ev = |p: &L| p.eval(&x, true).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn exact_division_recovers_factor(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = (&a * &c).primitive_gcd(&(&b * &c));
        prop_assert!((&a * &c).div_exact(&g).is_some());
        prop_assert!((&b * &c).div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.primitive_part()).is_some());
    }

    #[test]
    fn rational_field_axioms(a in poly(), b in nonzero_poly(), c in poly(), d in nonzero_poly()) {
        let x = Rf::new(a, b).unwrap();
        let y = Rf::new(c, d).unwrap();
        let sum = &x + &y;
        prop_assert_eq!(&sum - &y, x.clone());
        if !y.is_zero() {
            let prod = &x * &y;
            prop_assert_eq!(prod.checked_div(&y).unwrap(), x.clone());
        }
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), Rf::one());
        }
    }

    #[test]
    fn laurent_round_trips_through_rational(a in laurent()) {
        prop_assert_eq!(Rf::from(&a).to_laurent().unwrap(), a);
    }

    #[test]
    fn q_adic_expansion_inverts_units(a in laurent(), k in 0usize..4) {
        // u = 1 - q^(k+1) is a q-adic unit; (a u) / u expands back to a
        let u = L::one() - L::q_pow(k as i64 + 1);
        let x = Rf::from(&(&a * &u)).checked_div(&Rf::from(&u)).unwrap();
        prop_assert_eq!(x.expand(20).unwrap(), a.truncate_above(20));
    }
}
