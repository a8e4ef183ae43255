use cycnc::algebras::{jackson, quantum_a3, quantum_weyl};
use cycnc::ncalg::random_poly;
use cycnc::{CycElem, Presentation};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn jackson_params() -> impl Strategy<Value = (usize, i64, i64)> {
    (2usize..=6).prop_flat_map(|n| (Just(n), 0..n as i64, 0i64..=2))
}

fn build(n: usize, r: i64, x: i64) -> Presentation {
    jackson(n, r, &CycElem::from_int(n as u32, x)).unwrap()
}

fn polys(p: &Presentation, seed: u64, count: usize) -> Vec<cycnc::NcPoly> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_poly(&mut rng, p.ngens(), 4, 3, p.order())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jackson_is_confluent((n, r, x) in jackson_params()) {
        let p = build(n, r, x);
        prop_assert!(p.is_confluent(), "unresolved: {:?}", p.diamond().unresolved);
    }

    #[test]
    fn nf_is_idempotent_and_irreducible((n, r, x) in jackson_params(), seed in any::<u64>()) {
        let p = build(n, r, x);
        for f in polys(&p, seed, 3) {
            let g = p.nf(&f);
            prop_assert_eq!(p.nf(&g), g.clone());
            for (w, _) in g.terms() {
                prop_assert!(p.system().is_irreducible(w));
            }
        }
    }

    #[test]
    fn nf_is_linear((n, r, x) in jackson_params(), seed in any::<u64>()) {
        let p = build(n, r, x);
        let mut rng = StdRng::seed_from_u64(seed);
        let fs = polys(&p, seed, 2);
        let s = CycElem::random(n as u32, &mut rng, 4);
        let t = CycElem::random(n as u32, &mut rng, 4);
        let lhs = p.nf(&fs[0].scale(&s).add(&fs[1].scale(&t)));
        let rhs = p.nf(&fs[0]).scale(&s).add(&p.nf(&fs[1]).scale(&t));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_order_is_irrelevant((n, r, x) in jackson_params(), seed in any::<u64>()) {
        let p = build(n, r, x);
        let mut rng = StdRng::seed_from_u64(seed ^ 0x5eed);
        for f in polys(&p, seed, 3) {
            prop_assert_eq!(p.system().nf_random(&f, &mut rng), p.nf(&f));
        }
    }

    #[test]
    fn multiplication_is_associative((n, r, x) in jackson_params(), seed in any::<u64>()) {
        let p = build(n, r, x);
        let fs = polys(&p, seed, 3);
        let left = p.mul(&p.mul(&fs[0], &fs[1]), &fs[2]);
        let right = p.mul(&fs[0], &p.mul(&fs[1], &fs[2]));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn presentation_json_round_trip((n, r, x) in jackson_params()) {
        let p = build(n, r, x);
        let text = p.to_json();
        let q = Presentation::from_json(&text).unwrap();
        prop_assert_eq!(q.to_json(), text);
        prop_assert_eq!(q.names(), p.names());
    }

    #[test]
    fn quantum_families_are_confluent(o in prop::sample::select(vec![3u32, 4, 5, 7]), k in 1i64..7) {
        let q = CycElem::zeta(o, k);
        prop_assert!(quantum_weyl(&q).unwrap().is_confluent());
        prop_assert!(quantum_a3(&q).unwrap().is_confluent());
    }
}
