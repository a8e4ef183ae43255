use cycnc::algebras::jackson_fibre;
use cycnc::ext::{ext1, ext1_oracle};
use cycnc::linalg::Matrix;
use cycnc::modules::{central_character, torsion_free_module, torsion_module, verify_rep, Representation};
use cycnc::CycElem;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

fn frac(order: u32, (p, q): (i64, i64)) -> CycElem {
    CycElem::from_frac(order, p, q)
}

/// (n, r) with ζʳ ≠ 1.
fn twisted_params() -> impl Strategy<Value = (usize, i64)> {
    (2usize..=6).prop_flat_map(|n| (Just(n), 1..n as i64))
}

fn torsion_free(n: usize, r: i64, x: i64, a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Option<Representation> {
    let o = n as u32;
    let c = frac(o, c);
    if c.is_zero() {
        return None;
    }
    Some(torsion_free_module(n, r, &CycElem::from_int(o, x), &frac(o, a), &frac(o, b), &c).unwrap())
}

/// Unipotent upper-triangular change of basis.
fn unipotent(d: usize, order: u32, entries: &[i64]) -> Matrix {
    let mut p = Matrix::identity(d, order);
    let mut k = 0;
    for i in 0..d {
        for j in i + 1..d {
            p.set(i, j, CycElem::from_int(order, entries[k % entries.len()]));
            k += 1;
        }
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn torsion_free_modules_satisfy_relations((n, r) in twisted_params(), x in 0i64..=2, a in rational(), b in rational(), c in rational()) {
        if let Some(m) = torsion_free(n, r, x, a, b, c) {
            prop_assert!(verify_rep(&m).unwrap().holds);
            let ch = central_character(&m).unwrap();
            prop_assert_eq!(ch.values.len(), 3);
        }
    }

    #[test]
    fn torsion_modules_satisfy_relations((n, r) in twisted_params(), x in 0i64..=2, a in rational()) {
        let o = n as u32;
        if let Ok(m) = torsion_module(n, r, n, &CycElem::from_int(o, x), Some(&frac(o, a))) {
            prop_assert!(verify_rep(&m).unwrap().holds);
        }
    }

    #[test]
    fn representation_json_round_trip((n, r) in twisted_params(), a in rational(), b in rational(), c in rational()) {
        if let Some(m) = torsion_free(n, r, 1, a, b, c) {
            let back = Representation::from_json(&m.to_json()).unwrap();
            prop_assert_eq!(back.to_json(), m.to_json());
            prop_assert_eq!(back.mats, m.mats);
        }
    }

    #[test]
    fn ext_is_invariant_under_change_of_basis(a in rational(), b in rational(), c in rational(), entries in prop::collection::vec(-3i64..=3, 3)) {
        let Some(m) = torsion_free(3, 1, 1, a, b, c) else { return Ok(()) };
        let before = ext1(&m, &m).unwrap();
        prop_assert!(ext1_oracle(&m, &m, &before).unwrap());
        let moved = m.conjugate(&unipotent(m.dim(), m.order(), &entries)).unwrap();
        let after = ext1(&moved, &m).unwrap();
        prop_assert_eq!(before.dim, after.dim);
        prop_assert_eq!(before.hom_dim, after.hom_dim);
        prop_assert!(ext1_oracle(&moved, &m, &after).unwrap());
    }

    #[test]
    fn distinct_central_characters_have_no_extensions(a in rational(), b in rational(), c in rational(), a2 in rational(), b2 in rational(), c2 in rational()) {
        let (Some(m), Some(n)) = (torsion_free(3, 1, 1, a, b, c), torsion_free(3, 1, 1, a2, b2, c2)) else { return Ok(()) };
        if central_character(&m).unwrap() != central_character(&n).unwrap() {
            let e = ext1(&m, &n).unwrap();
            prop_assert_eq!(e.dim, 0);
            prop_assert_eq!(e.hom_dim, 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn small_fibres_are_associative(n in 2usize..=3, r in 1i64..=2, ch in prop::array::uniform3(-2i64..=2)) {
        let o = n as u32;
        let r = r % n as i64;
        prop_assume!(r != 0);
        let f = jackson_fibre(n, r, &CycElem::one(o), ch.map(|k| CycElem::from_int(o, k))).unwrap();
        prop_assert!(f.associativity_failures(1).is_empty());
    }
}
