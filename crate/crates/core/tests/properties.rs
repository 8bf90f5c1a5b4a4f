mod common;

use num_traits::One;
use opmono::counting::count;
use opmono::monomial::{format_word, parse_word};
use opmono::series::TruncatedSeries;
use opmono::{canonicalize, decode_word, encode_word, Monomial, Regime};
use proptest::prelude::*;

fn regime() -> impl Strategy<Value = Regime> {
    prop::sample::select(Regime::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn canonicalize_is_idempotent(m in common::monomial(3), regime in regime()) {
        let c = canonicalize(&m, regime);
        prop_assert_eq!(canonicalize(&c, regime), c.clone());
        prop_assert_eq!(c.degree(), m.degree());
        prop_assert_eq!(c.multiplicity(3).unwrap(), m.multiplicity(3).unwrap());
        prop_assert!(c.is_well_formed());
    }

    #[test]
    fn free_canonical_form_is_identity(m in common::monomial(3)) {
        prop_assert_eq!(canonicalize(&m, Regime::Free), m);
    }

    #[test]
    fn unary_swaps_collapse_when_unary_operators_commute(m in common::monomial(3)) {
        for x in common::unary_swaps(&m) {
            prop_assert_eq!(canonicalize(&x, Regime::CommUnary), canonicalize(&m, Regime::CommUnary));
            prop_assert_eq!(canonicalize(&x, Regime::CommBoth), canonicalize(&m, Regime::CommBoth));
        }
    }

    #[test]
    fn factor_swaps_collapse_when_multiplication_commutes(m in common::monomial(3)) {
        for x in common::factor_swaps(&m) {
            prop_assert_eq!(canonicalize(&x, Regime::CommMult), canonicalize(&m, Regime::CommMult));
            prop_assert_eq!(canonicalize(&x, Regime::CommBoth), canonicalize(&m, Regime::CommBoth));
        }
    }

    #[test]
    fn key_order_agrees_with_monomial_order(a in common::monomial(2), b in common::monomial(2)) {
        prop_assert_eq!(a.cmp(&b), a.key().cmp(&b.key()));
        prop_assert_eq!(a == b, a.key() == b.key());
    }

    #[test]
    fn words_round_trip(m in common::monomial(3)) {
        let w = encode_word(&m);
        prop_assert_eq!(decode_word(&w, 3).unwrap(), m.clone());
        prop_assert_eq!(parse_word(&format_word(&w)).unwrap(), w);
        prop_assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
    }

    #[test]
    fn counts_are_symmetric_under_label_permutation(
        r in 1u32..5,
        s in prop::collection::vec(0u32..3, 3),
        regime in regime(),
    ) {
        let base = count(regime, r, &s);
        let mut t = s.clone();
        t.rotate_left(1);
        prop_assert_eq!(count(regime, r, &t), base.clone());
        t.swap(0, 1);
        prop_assert_eq!(count(regime, r, &t), base);
    }

    #[test]
    fn quotient_counts_are_ordered(r in 1u32..6, s in prop::collection::vec(0u32..3, 1..4)) {
        let free = count(Regime::Free, r, &s);
        let c = count(Regime::CommUnary, r, &s);
        let m = count(Regime::CommMult, r, &s);
        let cm = count(Regime::CommBoth, r, &s);
        prop_assert!(cm <= c && cm <= m && c <= free && m <= free);
    }

    #[test]
    fn exp_and_log_are_inverse(coeffs in prop::collection::vec(-20i64..20, 1..10)) {
        let order = 12;
        let f = TruncatedSeries::from_integers(order, std::iter::once(0).chain(coeffs));
        let back = f.exp().unwrap().log().unwrap();
        prop_assert_eq!(back, f.clone());
        let g = &TruncatedSeries::one(order) + &f;
        prop_assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }

    #[test]
    fn sqrt_squares_back(coeffs in prop::collection::vec(-9i64..9, 1..8)) {
        let order = 10;
        let g = TruncatedSeries::from_integers(order, std::iter::once(1).chain(coeffs));
        let root = g.sqrt().unwrap();
        prop_assert_eq!(&root * &root, g);
        prop_assert!(root.coeff(0).is_one());
    }
}
