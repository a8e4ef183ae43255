use cycnc::homlie::{infinitesimal_homlie, kummer_witt_homlie, random_twisted_algebra, twisted_bracket};
use cycnc::CycElem;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn twisted_brackets_are_hom_lie(seed in any::<u64>(), order in prop::sample::select(vec![1u32, 3, 4, 5, 6])) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (alg, tw) = random_twisted_algebra(&mut rng, order);
        let h = twisted_bracket(&alg, &tw);
        prop_assert!(h.skew_violations().is_empty());
        prop_assert!(h.check_hom_jacobi().is_empty());
    }

    #[test]
    fn small_infinitesimal_algebras_are_lie(n in 2usize..=3, q in 2i64..9, a in -5i64..6) {
        let h = infinitesimal_homlie(n, &CycElem::from_int(1, q), &CycElem::from_int(1, a)).unwrap();
        prop_assert!(h.with_identity_twist().check_hom_jacobi().is_empty());
        prop_assert!(h.check_hom_jacobi().is_empty());
    }

    #[test]
    fn kummer_witt_brackets_are_hom_lie((n, r) in (2usize..=6).prop_flat_map(|n| (Just(n), 0..n as i64)), x in 0i64..=2) {
        let h = kummer_witt_homlie(n, r, &CycElem::from_int(n as u32, x)).unwrap();
        prop_assert!(h.skew_violations().is_empty());
        prop_assert!(h.check_hom_jacobi().is_empty());
    }
}
