use cycnc::CycElem;
use proptest::prelude::*;

const ORDERS: [u32; 7] = [1, 3, 4, 5, 7, 8, 12];

fn elem_of(order: u32) -> impl Strategy<Value = CycElem> {
    let len = order.max(2) as usize;
    (prop::collection::vec(-9i64..=9, len), 1i64..=6)
        .prop_map(move |(cs, den)| &CycElem::from_int_coeffs(order, &cs) * &CycElem::from_frac(order, 1, den))
}

fn triple() -> impl Strategy<Value = (CycElem, CycElem, CycElem)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|o| (elem_of(o), elem_of(o), elem_of(o)))
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses((a, b, _) in triple()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&b.checked_div(&a).unwrap() * &a, b.clone());
            prop_assert_eq!(a.pow(-2).unwrap(), a.inv().unwrap().powu(2));
        }
    }

    #[test]
    fn literal_round_trip((a, _, _) in triple()) {
        let text = a.to_string();
        prop_assert_eq!(CycElem::parse(&text, a.order()).unwrap(), a);
    }

    #[test]
    fn embedding_preserves_value((a, b, _) in triple(), k in 1u32..=3) {
        let big = a.order() * k;
        let la = a.embed(big).unwrap();
        prop_assert_eq!(&la, &a);
        prop_assert_eq!(&la * &b.embed(big).unwrap(), &a * &b);
    }

    #[test]
    fn zeta_powers(o in prop::sample::select(ORDERS.to_vec()), k in -30i64..30) {
        let z = CycElem::zeta(o, k);
        prop_assert!(z.powu(o as u64).is_one());
        prop_assert_eq!(&z * &CycElem::zeta(o, -k), CycElem::one(o));
    }
}
