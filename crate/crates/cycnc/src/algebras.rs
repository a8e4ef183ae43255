//! Named presentations: quantum planes and spaces, Kummer–Witt algebras,
//! the Jackson algebras, the quantum Weyl algebra, symbol algebras and
//! finite-dimensional fibres.

use serde::Serialize;

use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};
use crate::findim::FinDimAlgebra;
use crate::ncalg::{default_names, NcPoly, Params, Presentation, RewriteSystem, Word};

fn mono(ix: &[usize], c: CycElem) -> NcPoly {
    NcPoly::monomial(Word::from_indices(ix), c)
}

fn check_level(n: usize, r: i64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    if r < 0 || r >= n as i64 {
        return Err(Error::InvalidParameter(format!("need 0 ≤ r < n, got r={r}, n={n}")));
    }
    Ok(())
}

/// e₀e₁ = q e₁e₀.
pub fn quantum_plane(q: &CycElem) -> Result<Presentation> {
    let qi = q.inv()?;
    let sys = RewriteSystem::quadratic(default_names(2), vec![((1, 0), mono(&[0, 1], qi))])?;
    Ok(Presentation::new(
        "quantum_plane",
        q.order(),
        Params {
            q: Some(q.clone()),
            ..Params::default()
        },
        sys,
    ))
}

/// e₀e₁ = q e₁e₀, e₀e₂ = q² e₂e₀, e₁e₂ = q e₂e₁.
pub fn quantum_a3(q: &CycElem) -> Result<Presentation> {
    let qi = q.inv()?;
    let sys = RewriteSystem::quadratic(
        default_names(3),
        vec![
            ((1, 0), mono(&[0, 1], qi.clone())),
            ((2, 0), mono(&[0, 2], &qi * &qi)),
            ((2, 1), mono(&[1, 2], qi)),
        ],
    )?;
    Ok(Presentation::new(
        "quantum_a3",
        q.order(),
        Params {
            q: Some(q.clone()),
            ..Params::default()
        },
        sys,
    ))
}

/// Polynomial ring in k commuting variables.
pub fn commutative_poly(k: usize, order: u32) -> Result<Presentation> {
    let mut rules = Vec::new();
    for j in 0..k {
        for i in 0..j {
            rules.push(((j, i), mono(&[i, j], CycElem::one(order))));
        }
    }
    let sys = RewriteSystem::quadratic(default_names(k), rules)?;
    Ok(Presentation::new("commutative", order, Params::default(), sys))
}

/// The Kummer–Witt algebra: enveloping algebra of the level-r Kummer–Witt
/// hom-Lie algebra on e₀, …, e_{n−1}.
pub fn kummer_witt(n: usize, r: i64, x: &CycElem) -> Result<Presentation> {
    check_level(n, r)?;
    crate::homlie::kummer_witt_homlie(n, r, x)?.enveloping()
}

/// Jackson algebra: e₀e₁ = ζʳe₁e₀, e₂e₀ = ζʳe₀e₂,
/// e₂e₁ = ζ^{2r}e₁e₂ + x e₀ + x(1 − ζ^{2r}).
pub fn jackson(n: usize, r: i64, x: &CycElem) -> Result<Presentation> {
    check_level(n, r)?;
    let order = num_integer::lcm(n as u32, x.order());
    let z = |k: i64| CycElem::zeta(n as u32, k);
    let one = CycElem::one(order);
    let sys = RewriteSystem::quadratic(
        default_names(3),
        vec![
            ((1, 0), mono(&[0, 1], z(-r))),
            ((2, 0), mono(&[0, 2], z(r))),
            (
                (2, 1),
                mono(&[1, 2], z(2 * r))
                    .add(&mono(&[0], x.clone()))
                    .add(&mono(&[], x * &(&one - &z(2 * r)))),
            ),
        ],
    )?;
    Ok(Presentation::new(
        "jackson",
        order,
        Params {
            n: Some(n),
            r: Some(r),
            x: Some(x.clone()),
            ..Params::default()
        },
        sys,
    ))
}

/// The primed form on (e₀, e₁, e_{n−1}) relabelled (0, 1, 2):
/// e₀e₁ − ζʳe₁e₀ = (1−ζʳ)e₁, e₂e₀ − ζʳe₀e₂ = (1−ζʳ)e₂,
/// e₂e₁ − ζ^{2r}e₁e₂ = x(1−ζ^{2r})e₀.
pub fn jackson_prime(n: usize, r: i64, x: &CycElem) -> Result<Presentation> {
    check_level(n, r)?;
    let order = num_integer::lcm(n as u32, x.order());
    let z = |k: i64| CycElem::zeta(n as u32, k);
    let one = CycElem::one(order);
    let sys = RewriteSystem::quadratic(
        default_names(3),
        vec![
            (
                (1, 0),
                mono(&[0, 1], z(-r)).add(&mono(&[1], -(&z(-r) * &(&one - &z(r))))),
            ),
            ((2, 0), mono(&[0, 2], z(r)).add(&mono(&[2], &one - &z(r)))),
            (
                (2, 1),
                mono(&[1, 2], z(2 * r)).add(&mono(&[0], x * &(&one - &z(2 * r)))),
            ),
        ],
    )?;
    Ok(Presentation::new(
        "jackson_prime",
        order,
        Params {
            n: Some(n),
            r: Some(r),
            x: Some(x.clone()),
            ..Params::default()
        },
        sys,
    ))
}

/// vw − q wv = 1 with v = e₀, w = e₁.
pub fn quantum_weyl(q: &CycElem) -> Result<Presentation> {
    let qi = q.inv()?;
    let sys = RewriteSystem::quadratic(
        vec!["v".into(), "w".into()],
        vec![((1, 0), mono(&[0, 1], qi.clone()).add(&mono(&[], -qi)))],
    )?;
    Ok(Presentation::new(
        "quantum_weyl",
        q.order(),
        Params {
            q: Some(q.clone()),
            ..Params::default()
        },
        sys,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub image: String,
    pub holds: bool,
}

/// Substitutes e₀ ↦ (1 − ζ^{2r})⁻¹e₀ + 1 into each primed relation and reduces in 𝒥.
pub fn jackson_iso_check(n: usize, r: i64, x: &CycElem) -> Result<Vec<RelationCheck>> {
    check_level(n, r)?;
    let z2 = CycElem::zeta(n as u32, 2 * r);
    if z2.is_one() {
        return Err(Error::InvalidParameter("ζ^{2r} = 1: the primed and unprimed forms are not isomorphic".into()));
    }
    let target = jackson(n, r, x)?;
    let source = jackson_prime(n, r, x)?;
    let order = target.order();
    let scale = (&CycElem::one(order) - &z2).inv()?;
    let images = vec![
        mono(&[0], scale).add(&mono(&[], CycElem::one(order))),
        target.gen(1),
        target.gen(2),
    ];
    source
        .relations()
        .iter()
        .map(|rel| {
            let img = target.system().substitute(rel, &images)?;
            Ok(RelationCheck {
                relation: rel.display(source.names()),
                image: img.display(target.names()),
                holds: img.is_zero(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DownUpReport {
    /// Generator indices playing d and u, when an assignment works.
    pub assignment: Option<(usize, usize)>,
    pub tried: Vec<((usize, usize), bool)>,
    pub parameter_note: String,
}

impl DownUpReport {
    pub fn holds(&self) -> bool {
        self.assignment.is_some()
    }
}

/// Checks the two cubic down-up relations (with a := x) in 𝒥_x(r), trying
/// (d, u) = (e₁, e₂) and (e₂, e₁).
pub fn verify_downup(n: usize, r: i64, x: &CycElem) -> Result<DownUpReport> {
    check_level(n, r)?;
    let z = |k: i64| CycElem::zeta(n as u32, k);
    if z(2 * r).is_one() {
        return Err(Error::InvalidParameter("ζ^{2r} = 1".into()));
    }
    let p = jackson(n, r, x)?;
    let order = p.order();
    let one = CycElem::one(order);
    // ζ^r(1 + ζ^r)
    let mid = &z(r) * &(&one + &z(r));
    let lin = &(x * &(&one - &z(2 * r))) * &(&one - &z(r));
    let mut tried = Vec::new();
    let mut assignment = None;
    for (d, u) in [(1usize, 2usize), (2, 1)] {
        let rel1 = mono(&[d, d, u], one.clone())
            .add(&mono(&[d, u, d], -mid.clone()))
            .add(&mono(&[u, d, d], z(3 * r)))
            .add(&mono(&[d], -lin.clone()));
        let rel2 = mono(&[d, u, u], one.clone())
            .add(&mono(&[u, d, u], -mid.clone()))
            .add(&mono(&[u, u, d], z(3 * r)))
            .add(&mono(&[u], -lin.clone()));
        let ok = p.nf(&rel1).is_zero() && p.nf(&rel2).is_zero();
        tried.push(((d, u), ok));
        if ok && assignment.is_none() {
            assignment = Some((d, u));
        }
    }
    Ok(DownUpReport {
        assignment,
        tried,
        parameter_note: "down-up parameter a taken as x".into(),
    })
}

/// 𝒥_x(r)/(e₀) on (e₁, e₂) relabelled (0, 1): e₁e₀ → ζ^{2r}e₀e₁ + x(1 − ζ^{2r}).
pub fn jackson_mod_e0(n: usize, r: i64, x: &CycElem) -> Result<Presentation> {
    check_level(n, r)?;
    let order = num_integer::lcm(n as u32, x.order());
    let z2 = CycElem::zeta(n as u32, 2 * r);
    let sys = RewriteSystem::quadratic(
        vec!["e1".into(), "e2".into()],
        vec![(
            (1, 0),
            mono(&[0, 1], z2.clone()).add(&mono(&[], x * &(&CycElem::one(order) - &z2))),
        )],
    )?;
    Ok(Presentation::new(
        "jackson_mod_e0",
        order,
        Params {
            n: Some(n),
            r: Some(r),
            x: Some(x.clone()),
            ..Params::default()
        },
        sys,
    ))
}

/// Maps the quantum Weyl relation vw − ζ^{2r}wv − 1 into 𝒥_x(r)/(e₀) via
/// v ↦ e₂, w ↦ (x(1 − ζ^{2r}))⁻¹e₁ and returns the reduced image.
pub fn weyl_quotient_image(n: usize, r: i64, x: &CycElem) -> Result<NcPoly> {
    let quot = jackson_mod_e0(n, r, x)?;
    let order = quot.order();
    let z2 = CycElem::zeta(n as u32, 2 * r);
    let s = (x * &(&CycElem::one(order) - &z2)).inv()?;
    let weyl = quantum_weyl(&z2)?;
    let rel = &weyl.relations()[0];
    // relation is wv − q⁻¹vw + q⁻¹; rescale to vw − q wv − 1
    let rel = rel.scale(&-z2.clone());
    let images = vec![quot.gen(1), mono(&[0], s)];
    quot.system().substitute(&rel, &images)
}

/// Searches generator renamings e_i ↦ f_{perm[i]} and q = ζ^k under which
/// 𝒥_0(r) maps onto quantum 𝔸³(q) relation by relation.
pub fn jackson_zero_a3_renaming(n: usize, r: i64) -> Result<Option<([usize; 3], i64)>> {
    let j = jackson(n, r, &CycElem::zero(1))?;
    let rels = j.relations();
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for k in 0..n as i64 {
        let a3 = quantum_a3(&CycElem::zeta(n as u32, k))?;
        for perm in PERMS {
            let images: Vec<NcPoly> = perm.iter().map(|&t| a3.gen(t)).collect();
            let mut ok = true;
            for rel in &rels {
                if !a3.system().substitute(rel, &images)?.is_zero() {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(Some((perm, k)));
            }
        }
    }
    Ok(None)
}

/// Symbol algebra x y = ξ y x, xⁿ = a, yⁿ = b with ξ = ζ_n^k, basis xⁱyʲ.
pub fn symbol_algebra(n: usize, k: i64, a: &CycElem, b: &CycElem) -> Result<FinDimAlgebra> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidParameter("symbol algebra needs a, b ≠ 0".into()));
    }
    let order = num_integer::lcm(num_integer::lcm(n as u32, a.order()), b.order());
    let xi = CycElem::zeta(n as u32, k);
    let idx = |i: usize, j: usize| i * n + j;
    let mut products = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for i2 in 0..n {
                for j2 in 0..n {
                    // xⁱyʲ · x^{i2}y^{j2} = ξ^{−j·i2} x^{i+i2} y^{j+j2}
                    let mut c = xi.pow(-((j * i2) as i64))?;
                    let (mut p, mut q) = (i + i2, j + j2);
                    if p >= n {
                        p -= n;
                        c = &c * a;
                    }
                    if q >= n {
                        q -= n;
                        c = &c * b;
                    }
                    products.push(vec![(idx(p, q), c)]);
                }
            }
        }
    }
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("x^{i}y^{j}"));
        }
    }
    let mut unit = vec![CycElem::zero(order); n * n];
    unit[0] = CycElem::one(order);
    let mut gx = unit.iter().map(|_| CycElem::zero(order)).collect::<Vec<_>>();
    let mut gy = gx.clone();
    if n > 1 {
        gx[idx(1, 0)] = CycElem::one(order);
        gy[idx(0, 1)] = CycElem::one(order);
    }
    Ok(FinDimAlgebra::new(order, labels, products, unit)?
        .with_generators(vec![("x".into(), gx), ("y".into(), gy)]))
}

/// For gcd(n, k) = 1 and k k' ≡ 1 (mod n): the map x ↦ x, y ↦ y^{k'}
/// from (a, b^{k'})_ζ to (a, b)_{ζ^k}; returns whether it is an algebra isomorphism.
pub fn symbol_rebase_check(n: usize, k: i64, a: &CycElem, b: &CycElem) -> Result<bool> {
    let kk = (1..n as i64)
        .find(|t| (k * t).rem_euclid(n as i64) == 1)
        .ok_or_else(|| Error::InvalidParameter("gcd(n, k) ≠ 1".into()))?;
    let source = symbol_algebra(n, 1, a, &b.powu(kk as u64))?;
    let target = symbol_algebra(n, k, a, b)?;
    // image of xⁱyʲ is xⁱ y^{k'j} = b^{⌊k'j/n⌋} xⁱ y^{k'j mod n}
    let mut images = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let e = kk as usize * j;
            let mut v = target.zero_vec();
            v[i * n + e % n] = b.powu((e / n) as u64);
            images.push(v);
        }
    }
    let mut inverse_check = crate::linalg::Matrix::zeros(n * n, n * n, target.order());
    for (c, v) in images.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            inverse_check.set(r, c, x.clone());
        }
    }
    Ok(inverse_check.rank() == n * n && source.is_homomorphism(&target, &images))
}

/// Fibre 𝒥/(e_i^N − values[i]) of a presentation whose generator powers e_i^N are central.
pub fn fibre(p: &Presentation, exponent: usize, values: &[CycElem]) -> Result<FinDimAlgebra> {
    if values.len() != p.ngens() {
        return Err(Error::DimensionMismatch(format!(
            "{} values for {} generators",
            values.len(),
            p.ngens()
        )));
    }
    if !p.is_confluent() {
        return Err(Error::InvalidAlgebra("presentation is not confluent".into()));
    }
    for g in 0..p.ngens() {
        let power = p.word(&vec![g; exponent]);
        if !p.is_central(&power) {
            return Err(Error::NotCentral(format!("{}^{exponent}", p.names()[g])));
        }
    }
    let powers: Vec<(usize, usize, CycElem)> = values
        .iter()
        .enumerate()
        .map(|(g, v)| (g, exponent, v.clone()))
        .collect();
    let ext = p.with_power_rules("fibre", &powers)?;
    let rep = ext.diamond();
    if !rep.is_confluent() {
        return Err(Error::InvalidAlgebra(format!(
            "power reductions are not confluent ({} unresolved overlaps)",
            rep.unresolved.len()
        )));
    }
    let max_deg = p.ngens() * (exponent - 1);
    let words: Vec<Word> = ext
        .system()
        .irreducible_words(max_deg)
        .into_iter()
        .flatten()
        .collect();
    let index: std::collections::HashMap<Word, usize> =
        words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let order = num_integer::lcm(p.order(), values.iter().fold(1, |o, v| num_integer::lcm(o, v.order())));
    let mut products = Vec::with_capacity(words.len() * words.len());
    for u in &words {
        for v in &words {
            let prod = ext.nf(&NcPoly::monomial(u.concat(v), CycElem::one(order)));
            let mut row = Vec::new();
            for (w, c) in prod.terms() {
                let k = *index
                    .get(w)
                    .ok_or_else(|| Error::InvalidAlgebra(format!("normal word {w:?} outside basis")))?;
                row.push((k, c.clone()));
            }
            products.push(row);
        }
    }
    let labels = words.iter().map(|w| w.display(p.names())).collect();
    let mut unit = vec![CycElem::zero(order); words.len()];
    unit[index[&Word::empty()]] = CycElem::one(order);
    let gens = (0..p.ngens())
        .map(|g| {
            let mut v = vec![CycElem::zero(order); words.len()];
            if let Some(&k) = index.get(&Word::letter(g)) {
                v[k] = CycElem::one(order);
            }
            (p.names()[g].clone(), v)
        })
        .collect();
    Ok(FinDimAlgebra::new(order, labels, products, unit)?.with_generators(gens))
}

/// Fibre of a Jackson algebra at the character (u₀, u₁, u₂) = (a, b, c), exponent n.
pub fn jackson_fibre(n: usize, r: i64, x: &CycElem, character: [CycElem; 3]) -> Result<FinDimAlgebra> {
    let p = jackson(n, r, x)?;
    fibre(&p, n, &character)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> CycElem {
        CycElem::from_int(1, k)
    }

    #[test]
    fn jackson_rules() {
        let p = jackson(3, 1, &c(1)).unwrap();
        let z = |k| CycElem::zeta(3, k);
        let nf = p.nf(&p.word(&[2, 1]));
        let expect = mono(&[1, 2], z(2))
            .add(&mono(&[0], CycElem::one(3)))
            .add(&mono(&[], &CycElem::one(3) - &z(2)));
        assert_eq!(nf, expect);
        assert!(p.is_confluent());
        // r = 2, n = 4: anticommuting e₀ with e₁, e₂ and e₂e₁ − e₁e₂ = x e₀
        let q = jackson(4, 2, &c(5)).unwrap();
        let rule = q.system().rule_for(&[2, 1]).unwrap();
        assert_eq!(rule.rhs, mono(&[1, 2], CycElem::one(4)).add(&mono(&[0], c(5))));
        assert_eq!(q.system().rule_for(&[1, 0]).unwrap().rhs, mono(&[0, 1], c(-1)));
    }

    #[test]
    fn jackson_zero_is_quantum_a3() {
        for n in 3..=6usize {
            for r in 1..n as i64 {
                let (perm, k) = jackson_zero_a3_renaming(n, r).unwrap().expect("renaming exists");
                let q = CycElem::zeta(n as u32, k);
                let a3 = quantum_a3(&q).unwrap();
                let j = jackson(n, r, &CycElem::zero(1)).unwrap();
                let images: Vec<NcPoly> = perm.iter().map(|&t| a3.gen(t)).collect();
                for rel in j.relations() {
                    assert!(a3.system().substitute(&rel, &images).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn prime_form_isomorphism() {
        assert!(jackson_iso_check(3, 1, &c(1)).unwrap().iter().all(|r| r.holds));
        assert!(jackson_iso_check(4, 1, &c(2)).unwrap().iter().all(|r| r.holds));
        assert!(jackson_iso_check(4, 2, &c(1)).is_err());
    }

    #[test]
    fn downup_form() {
        let rep = verify_downup(3, 1, &c(1)).unwrap();
        assert_eq!(rep.assignment, Some((1, 2)));
        assert!(verify_downup(4, 1, &c(2)).unwrap().holds());
        assert!(verify_downup(3, 0, &c(1)).is_err());
    }

    #[test]
    fn weyl_quotient() {
        assert!(weyl_quotient_image(3, 1, &c(1)).unwrap().is_zero());
        assert!(weyl_quotient_image(5, 2, &c(3)).unwrap().is_zero());
    }

    #[test]
    fn kummer_witt_overlaps() {
        for n in 2..=3usize {
            for r in 0..n as i64 {
                assert!(kummer_witt(n, r, &c(2)).unwrap().is_confluent());
            }
        }
        // the overlap e₃e₂e₁ leaves an irreducible difference at n = 4
        let d = kummer_witt(4, 1, &c(2)).unwrap().diamond().clone();
        assert_eq!(d.unresolved.len(), 1);
        assert_eq!(d.unresolved[0].word, vec![3, 2, 1]);
    }

    #[test]
    fn quaternion_symbol() {
        let q = symbol_algebra(2, 1, &c(-1), &c(-1)).unwrap();
        assert_eq!(q.dim(), 4);
        let x = q.basis(2);
        let y = q.basis(1);
        let xy = q.mul(&x, &y);
        let yx = q.mul(&y, &x);
        assert_eq!(xy, yx.iter().map(|c| -c).collect::<Vec<_>>());
        assert_eq!(q.mul(&x, &x), q.unit().iter().map(|c| -c).collect::<Vec<_>>());
        assert!(q.is_central_simple());
    }

    #[test]
    fn symbol_is_central_simple() {
        let s = symbol_algebra(3, 1, &c(1), &c(1)).unwrap();
        assert_eq!(s.dim(), 9);
        assert!(s.associativity_failures(1).is_empty());
        assert!(s.is_central_simple());
        assert!(symbol_rebase_check(3, 2, &c(2), &c(3)).unwrap());
    }

    #[test]
    fn commutative_fibre() {
        let p = commutative_poly(3, 1).unwrap();
        let f = fibre(&p, 2, &[c(1), c(2), c(3)]).unwrap();
        assert_eq!(f.dim(), 8);
        assert!(f.is_commutative());
    }
}
