//! Property tests for the exact scalar tower: ring/field axioms, the bar
//! involution, gcd exactness, and unit normalization.

use proptest::prelude::*;
use qaffine::bipoly::{BiPoly, BiRat};
use qaffine::scalar::{rat, LaurentPoly, RatFunc};

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i64..=3), (-4i64..=4), (1i64..=3)), 0..3)
        .prop_map(|terms| {
            LaurentPoly::from_terms(terms.into_iter().map(|(e, n, d)| (e, rat(n, d))))
        })
}

fn arb_laurent_nonzero() -> impl Strategy<Value = LaurentPoly> {
    arb_laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_laurent(), arb_laurent_nonzero()).prop_map(|(n, d)| RatFunc::new(n, d))
}

fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((-2i64..=2), arb_laurent()), 0..3).prop_map(|terms| {
        let mut p = BiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    })
}

fn arb_birat() -> impl Strategy<Value = BiRat> {
    (arb_bipoly(), arb_bipoly().prop_filter("nonzero", |p| !p.is_zero()))
        .prop_map(|(n, d)| BiRat::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn laurent_ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(&a + &(-&a), LaurentPoly::zero());
    }

    #[test]
    fn laurent_bar_is_multiplicative_involution(a in arb_laurent(), b in arb_laurent()) {
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn laurent_gcd_divides_exactly(a in arb_laurent_nonzero(), b in arb_laurent_nonzero()) {
        let g = a.gcd(&b);
        prop_assert!(!g.is_zero());
        prop_assert_eq!(&a.div_exact(&g) * &g, a.clone());
        prop_assert_eq!(&b.div_exact(&g) * &g, b.clone());
    }

    #[test]
    fn laurent_unit_normalization(a in arb_laurent_nonzero(), e in -3i64..=3, n in 1i64..=4) {
        let norm = a.unit_normalized();
        prop_assert_eq!(norm.unit_normalized(), norm.clone());
        prop_assert_eq!(a.mul_unit(e, &rat(n, 1)).unit_normalized(), norm.clone());
        prop_assert_eq!(a.mul_unit(e, &rat(-n, 1)).unit_normalized(), norm);
    }

    #[test]
    fn laurent_gcd_is_unit_stable(a in arb_laurent_nonzero(), b in arb_laurent_nonzero(), e in -2i64..=2) {
        let g1 = a.gcd(&b).unit_normalized();
        let g2 = a.mul_unit(e, &rat(-3, 1)).gcd(&b).unit_normalized();
        prop_assert_eq!(g1, g2);
    }

    #[test]
    fn ratfunc_field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), RatFunc::one());
            prop_assert_eq!(&(&b / &a) * &a, b);
        }
    }

    #[test]
    fn ratfunc_bar_is_multiplicative_involution(a in arb_ratfunc(), b in arb_ratfunc()) {
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn bipoly_ring_and_division(a in arb_bipoly(), b in arb_bipoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), a.clone());
            let norm = (&a * &b).unit_normalized();
            prop_assert_eq!(norm.unit_normalized(), norm);
        }
    }

    #[test]
    fn birat_field_axioms(a in arb_birat(), b in arb_birat()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), BiRat::one());
        }
    }
}
