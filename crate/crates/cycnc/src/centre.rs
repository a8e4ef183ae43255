//! Centre parameters and generators of the Jackson algebras, the
//! σ automorphism, and the normal family Ω_a.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::algebras::jackson;
use crate::check::{all_pass, Check};
use crate::commpoly::CommPoly;
use crate::cyclotomic::{q_int, CycElem};
use crate::error::{Error, Result};
use crate::ncalg::{NcPoly, Presentation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CentreParams {
    pub n: usize,
    pub r: i64,
    /// least l ≥ 1 with l·r ≡ 0 (mod n)
    pub l: u64,
    /// least t ≥ 1 with 2t·r ≡ 0 (mod n)
    pub t: u64,
    /// t·r / n when that is a positive integer
    pub a_exp: Option<u64>,
}

pub fn centre_params(n: usize, r: i64) -> Result<CentreParams> {
    if n < 2 || r < 0 || r >= n as i64 {
        return Err(Error::InvalidParameter(format!("need n ≥ 2 and 0 ≤ r < n, got n={n}, r={r}")));
    }
    let nn = n as u64;
    let r_u = r as u64;
    if r == 0 {
        return Ok(CentreParams { n, r, l: 1, t: 1, a_exp: None });
    }
    let l = (1..=2 * nn).find(|k| (k * r_u).is_multiple_of(nn)).expect("l ≤ n");
    let t = (1..=2 * nn).find(|k| (2 * k * r_u).is_multiple_of(nn)).expect("t ≤ n");
    let a_exp = if (t * r_u).is_multiple_of(nn) { Some(t * r_u / nn) } else { None };
    Ok(CentreParams { n, r, l, t, a_exp })
}

fn random_word<R: Rng>(rng: &mut R, ngens: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..ngens)).collect()
}

/// Whether z commutes with every generator and with `samples` random words of length ≤ 5.
pub fn central_with_words(p: &Presentation, z: &NcPoly, samples: usize, seed: u64) -> bool {
    if !p.is_central(z) {
        return false;
    }
    let mut rng = StdRng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let w = p.word(&random_word(&mut rng, p.ngens(), 5));
        p.nf(&p.mul(z, &w).sub(&p.mul(&w, z))).is_zero()
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CentreReport {
    pub params: CentreParams,
    pub checks: Vec<Check>,
    /// whether wᵗ (w = e₁e₂) is central; expected exactly when x = 0
    pub w_power_central: bool,
}

impl CentreReport {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }
}

/// Membership checks for the asserted centre generators of 𝒥_x(r).
pub fn verify_centre(n: usize, r: i64, x: &CycElem) -> Result<CentreReport> {
    let params = centre_params(n, r)?;
    let p = jackson(n, r, x)?;
    let mut checks = Vec::new();
    if !p.is_confluent() {
        checks.push(Check::new("pbw", false, "presentation is not confluent"));
    }
    for g in 0..3 {
        let z = p.word(&vec![g; params.l as usize]);
        let ok = central_with_words(&p, &z, 20, 17 + g as u64);
        checks.push(Check::new(format!("e{g}^{} central", params.l), ok, ""));
    }
    let w = p.word(&[1, 2]);
    let wt = p.pow(&w, params.t as u32);
    let w_power_central = central_with_words(&p, &wt, 20, 29);
    let expected = x.is_zero();
    checks.push(Check::new(
        format!("w^{} central iff x = 0", params.t),
        w_power_central == expected,
        format!("central: {w_power_central}"),
    ));
    Ok(CentreReport { params, checks, w_power_central })
}

/// σ^k(w) = c_w·w + c_0·e₀ + c_1 tracked on the span of (w, e₀, 1).
#[derive(Clone, Debug, PartialEq, Eq)]
struct AffineImage {
    w: CycElem,
    e0: CycElem,
    one: CycElem,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaReport {
    pub a: CycElem,
    pub b: CycElem,
    pub checks: Vec<Check>,
    pub sigma_order: Option<u64>,
    pub l: u64,
}

impl SigmaReport {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }
}

/// The automorphism σ(e₀) = ζʳe₀, σ(w) = ζ^{2r}(w − a e₀ − b) of K[e₀, w] with
/// a = −xζ^{−2r}, b = x(1 − ζ^{−2r}), checked against 𝒥_x(r) and iterated.
pub fn sigma_check(n: usize, r: i64, x: &CycElem) -> Result<SigmaReport> {
    let params = centre_params(n, r)?;
    let p = jackson(n, r, x)?;
    let order = p.order();
    let z = |k: i64| CycElem::zeta(order, k * (order as i64 / n as i64));
    let one = CycElem::one(order);
    let a = -(x * &z(-2 * r));
    let b = x * &(&one - &z(-2 * r));
    let z2 = z(2 * r);
    let w = p.word(&[1, 2]);
    let sigma_w = w
        .add(&p.gen(0).scale(&-a.clone()))
        .add(&p.scalar(-b.clone()))
        .scale(&z2);
    let mut checks = Vec::new();
    checks.push(Check::new(
        "σ(w) = e2·e1",
        p.nf(&p.word(&[2, 1])) == p.nf(&sigma_w),
        "",
    ));
    let lhs = p.mul(&w, &p.gen(1)).sub(&p.mul(&p.gen(1), &sigma_w));
    checks.push(Check::new("w·e1 = e1·σ(w)", p.nf(&lhs).is_zero(), ""));
    let rhs = p.mul(&p.gen(2), &w).sub(&p.mul(&sigma_w, &p.gen(2)));
    checks.push(Check::new("e2·w = σ(w)·e2", p.nf(&rhs).is_zero(), ""));

    // iterate σ on the affine span and compare with the closed form
    let apply = |img: &AffineImage| AffineImage {
        w: &img.w * &z2,
        e0: &(&img.e0 * &z(r)) - &(&(&img.w * &a) * &z2),
        one: &img.one - &(&(&img.w * &b) * &z2),
    };
    let zr = z(r);
    let mut img = AffineImage { w: one.clone(), e0: CycElem::zero(order), one: CycElem::zero(order) };
    let mut sigma_order = None;
    let mut closed_ok = true;
    let bound = 2 * n as u64;
    for k in 1..=bound {
        img = apply(&img);
        let closed = AffineImage {
            w: z(2 * k as i64 * r),
            e0: -(&(&a * &z((k as i64 + 1) * r)) * &q_int(k as u32, &zr)),
            one: -(&(&z2 * &q_int(k as u32, &z2)) * &b),
        };
        if img != closed {
            closed_ok = false;
        }
        let identity = img.w.is_one() && img.e0.is_zero() && img.one.is_zero() && z(k as i64 * r).is_one();
        if identity && sigma_order.is_none() {
            sigma_order = Some(k);
            break;
        }
    }
    checks.push(Check::new("σ^k(w) closed form", closed_ok, ""));
    checks.push(Check::new(
        "ord(σ) = l",
        sigma_order == Some(params.l),
        format!("ord(σ) = {sigma_order:?}, l = {}", params.l),
    ));
    Ok(SigmaReport { a, b, checks, sigma_order, l: params.l })
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationIdentityReport {
    pub params: CentreParams,
    pub checks: Vec<Check>,
}

impl PresentationIdentityReport {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }
}

/// In 𝒥_0(r): wᵏ = ζ^{k(k−1)r}e₁ᵏe₂ᵏ for 1 ≤ k ≤ t·r, and u₃^r = u₁^a u₂^a
/// with u_i = e_iˡ, u₃ = wᵗ.
pub fn centre_presentation_check(n: usize, r: i64) -> Result<PresentationIdentityReport> {
    let params = centre_params(n, r)?;
    let p = jackson(n, r, &CycElem::zero(1))?;
    let w = p.word(&[1, 2]);
    let mut checks = Vec::new();
    let top = (params.t * r.max(1) as u64) as usize;
    let mut wk = p.one();
    let mut powers_ok = true;
    let mut first_bad = String::new();
    for k in 1..=top {
        wk = p.mul(&wk, &w);
        let mut ix = vec![1; k];
        ix.extend(vec![2; k]);
        let expect = p.word(&ix).scale(&p.zeta((k * (k - 1)) as i64 * r));
        if wk != expect {
            powers_ok = false;
            if first_bad.is_empty() {
                first_bad = format!("fails at k = {k}");
            }
        }
    }
    checks.push(Check::new(format!("w^k identity for k ≤ {top}"), powers_ok, first_bad));
    match params.a_exp {
        None => checks.push(Check::skipped("u3^r = u1^a u2^a", "t·r is not a multiple of n")),
        Some(a) => {
            let u1 = p.word(&vec![1; params.l as usize]);
            let u2 = p.word(&vec![2; params.l as usize]);
            let u3 = p.pow(&w, params.t as u32);
            let lhs = p.pow(&u3, r as u32);
            let rhs = p.mul(&p.pow(&u1, a as u32), &p.pow(&u2, a as u32));
            let diff = p.nf(&lhs.sub(&rhs));
            checks.push(Check::new(
                format!("u3^{r} = u1^{a} u2^{a}"),
                diff.is_zero(),
                if diff.is_zero() {
                    String::new()
                } else {
                    format!("degrees {} vs {}", lhs.degree().unwrap_or(0), rhs.degree().unwrap_or(0))
                },
            ));
        }
    }
    Ok(PresentationIdentityReport { params, checks })
}

#[derive(Clone, Debug, Serialize)]
pub struct TEqualsL {
    pub n: usize,
    pub r: i64,
    pub l: u64,
    pub t: u64,
    pub equal: bool,
}

/// Tabulates whether t = l for 2 ≤ n ≤ max_n, 1 ≤ r < n.
pub fn t_equals_l_table(max_n: usize) -> Vec<TEqualsL> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for r in 1..n as i64 {
            let c = centre_params(n, r).expect("valid range");
            out.push(TEqualsL { n, r, l: c.l, t: c.t, equal: c.l == c.t });
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalElement {
    pub coefficients: [CycElem; 3],
    /// exponent e in the ζ^{−e} of the linear coefficient
    pub exponent: i64,
    #[serde(serialize_with = "ser_poly")]
    pub omega: NcPoly,
    pub gamma_diag: [CycElem; 3],
    pub defects: Vec<String>,
}

fn ser_poly<S: serde::Serializer>(p: &NcPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.display(&crate::ncalg::default_names(3)))
}

impl NormalElement {
    pub fn is_normal(&self) -> bool {
        self.defects.is_empty()
    }
}

/// γ = diag(1, ζ^{2r}, ζ^{−2r}).
pub fn gamma_diag(n: usize, r: i64) -> [CycElem; 3] {
    let z = |k| CycElem::zeta(n as u32, k);
    [CycElem::one(n as u32), z(2 * r), z(-2 * r)]
}

/// Defects nf(Ω e_g − γ_g e_g Ω) for the diagonal automorphism γ, one string per failing generator.
pub fn normality_defects(p: &Presentation, omega: &NcPoly, gamma: &[CycElem]) -> Vec<String> {
    (0..p.ngens())
        .filter_map(|g| {
            let e = p.gen(g);
            let d = p.nf(&p.mul(omega, &e).sub(&p.mul(&e, omega).scale(&gamma[g])));
            (!d.is_zero()).then(|| format!("{}: {}", p.names()[g], d.display(p.names())))
        })
        .collect()
}

/// Ω_a = a₀e₂e₁ − a₁e₁e₂ + a₂e₀² − x(a₀ − a₁ζ^{−e})(1 − ζʳ)⁻¹e₀ − x(a₀ − a₁).
pub fn omega_poly(n: usize, r: i64, x: &CycElem, a: &[CycElem; 3], exponent: i64) -> Result<NcPoly> {
    let zr = CycElem::zeta(n as u32, r);
    if zr.is_one() {
        return Err(Error::InvalidParameter("ζ^r = 1".into()));
    }
    let one = CycElem::one(n as u32);
    let lin = &(x * &(&a[0] - &(&a[1] * &CycElem::zeta(n as u32, -exponent)))) * &(&one - &zr).inv()?;
    let konst = x * &(&a[0] - &a[1]);
    let m = |ix: &[usize], c: CycElem| NcPoly::monomial(Word::from_indices(ix), c);
    Ok(m(&[2, 1], a[0].clone())
        .add(&m(&[1, 2], -a[1].clone()))
        .add(&m(&[0, 0], a[2].clone()))
        .add(&m(&[0], -lin))
        .add(&m(&[], -konst)))
}

pub fn omega(n: usize, r: i64, x: &CycElem, a: &[CycElem; 3], exponent: i64) -> Result<NormalElement> {
    let p = jackson(n, r, x)?;
    let raw = omega_poly(n, r, x, a, exponent)?;
    let omega = p.nf(&raw);
    let gamma = gamma_diag(n, r);
    let defects = normality_defects(&p, &omega, &gamma);
    Ok(NormalElement {
        coefficients: a.clone(),
        exponent,
        omega,
        gamma_diag: gamma,
        defects,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VariantResolution {
    /// (exponent, normal?) for each exponent tried
    pub tried: Vec<(i64, bool)>,
    pub resolved: Option<NormalElement>,
}

/// Tries every exponent e ∈ {0, …, n−1}, the printed e = 1 and e = 2r first.
pub fn resolve_omega(n: usize, r: i64, x: &CycElem, a: &[CycElem; 3]) -> Result<VariantResolution> {
    let mut order: Vec<i64> = vec![1, (2 * r).rem_euclid(n as i64)];
    for e in 0..n as i64 {
        if !order.contains(&e) {
            order.push(e);
        }
    }
    let mut tried = Vec::new();
    let mut resolved = None;
    for e in order {
        let el = omega(n, r, x, a, e)?;
        let ok = el.is_normal();
        tried.push((e, ok));
        if ok && resolved.is_none() {
            resolved = Some(el);
        }
    }
    Ok(VariantResolution { tried, resolved })
}

/// Checks that Ω_a Ω_b is normal for γ².
pub fn omega_product_normal(n: usize, r: i64, x: &CycElem, a: &[CycElem; 3], b: &[CycElem; 3], exponent: i64) -> Result<bool> {
    let p = jackson(n, r, x)?;
    let oa = omega_poly(n, r, x, a, exponent)?;
    let ob = omega_poly(n, r, x, b, exponent)?;
    let prod = p.mul(&oa, &ob);
    let g = gamma_diag(n, r);
    let g2: Vec<CycElem> = g.iter().map(|c| c * c).collect();
    Ok(normality_defects(&p, &prod, &g2).is_empty())
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralImage {
    pub quadric: CommPoly,
    pub generators_central: bool,
}

/// (a₀−a₁)u₁u₂ + a₂u₀² − x(a₀−a₁ζ^{−e})(1−ζʳ)⁻¹u₀ − x(a₀−a₁) with u_i = e_iˡ,
/// together with a centrality check of the u_i.
pub fn omega_central_image(n: usize, r: i64, x: &CycElem, a: &[CycElem; 3], exponent: i64) -> Result<CentralImage> {
    let params = centre_params(n, r)?;
    let zr = CycElem::zeta(n as u32, r);
    if zr.is_one() {
        return Err(Error::InvalidParameter("ζ^r = 1".into()));
    }
    let one = CycElem::one(n as u32);
    let mut q = CommPoly::zero(vec!["u0".into(), "u1".into(), "u2".into()]);
    q.add_term(&[0, 1, 1], &a[0] - &a[1]);
    q.add_term(&[2, 0, 0], a[2].clone());
    let lin = &(x * &(&a[0] - &(&a[1] * &CycElem::zeta(n as u32, -exponent)))) * &(&one - &zr).inv()?;
    q.add_term(&[1, 0, 0], -lin);
    q.add_term(&[0, 0, 0], -(x * &(&a[0] - &a[1])));
    let p = jackson(n, r, x)?;
    let generators_central = (0..3).all(|g| p.is_central(&p.word(&vec![g; params.l as usize])));
    Ok(CentralImage { quadric: q, generators_central })
}

/// e₀Ω_a for a = (1, 0, 0): central exactly when ζ^{3r} = 1 in the checked range.
pub fn e0_omega_central(n: usize, r: i64, x: &CycElem, exponent: i64) -> Result<bool> {
    let p = jackson(n, r, x)?;
    let a = [CycElem::one(1), CycElem::zero(1), CycElem::zero(1)];
    let o = omega_poly(n, r, x, &a, exponent)?;
    Ok(p.is_central(&p.mul(&p.gen(0), &o)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> CycElem {
        CycElem::from_int(1, k)
    }

    #[test]
    fn params() {
        let p = centre_params(3, 1).unwrap();
        assert_eq!((p.l, p.t, p.a_exp), (3, 3, Some(1)));
        let p = centre_params(4, 2).unwrap();
        assert_eq!((p.l, p.t, p.a_exp), (2, 1, None));
        let p = centre_params(6, 1).unwrap();
        assert_eq!((p.l, p.t), (6, 3));
        assert_eq!(centre_params(5, 0).unwrap().l, 1);
        assert!(centre_params(3, 3).is_err());
    }

    #[test]
    fn centre_generators() {
        let rep = verify_centre(3, 1, &c(1)).unwrap();
        assert!(rep.passed());
        assert!(!rep.w_power_central);
        let rep = verify_centre(3, 1, &c(0)).unwrap();
        assert!(rep.passed());
        assert!(rep.w_power_central);
        // r = 0, x ≠ 0: e₂e₁ − e₁e₂ = x e₀, so e₁ and e₂ are not central
        assert!(verify_centre(4, 0, &c(0)).unwrap().passed());
        let rep = verify_centre(4, 0, &c(1)).unwrap();
        assert!(!rep.checks[1].passed() && !rep.checks[2].passed());
    }

    #[test]
    fn sigma_automorphism() {
        let rep = sigma_check(3, 1, &c(1)).unwrap();
        assert!(rep.passed(), "{:?}", rep.checks);
        assert_eq!(rep.sigma_order, Some(3));
        let rep = sigma_check(4, 1, &c(2)).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.sigma_order, Some(4));
        assert!(sigma_check(5, 2, &c(0)).unwrap().passed());
    }

    #[test]
    fn presentation_identities() {
        assert!(centre_presentation_check(3, 1).unwrap().passed());
        assert!(centre_presentation_check(3, 2).unwrap().passed());
        assert!(centre_presentation_check(2, 1).unwrap().passed());
        // a_exp is defined but the degrees differ when gcd(n, r) > 1
        let rep = centre_presentation_check(6, 2).unwrap();
        assert!(!rep.passed());
    }

    #[test]
    fn omega_variant() {
        let a = [c(1), c(0), c(0)];
        let res = resolve_omega(3, 1, &c(1), &a).unwrap();
        let el = res.resolved.expect("some exponent works");
        assert!(el.is_normal());
        let res0 = resolve_omega(3, 1, &c(0), &[c(2), c(3), c(5)]).unwrap();
        assert!(res0.tried.iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn central_image() {
        let img = omega_central_image(3, 1, &c(0), &[c(1), c(0), c(0)], 1).unwrap();
        assert_eq!(img.quadric.to_string(), "u1*u2");
        assert!(img.generators_central);
        let img = omega_central_image(3, 1, &c(1), &[c(0), c(0), c(1)], 1).unwrap();
        assert_eq!(img.quadric.to_string(), "u0^2");
    }
}
