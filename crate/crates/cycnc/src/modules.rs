//! Finite-dimensional representations of the Jackson algebras: the
//! one-dimensional locus, torsion and torsion-free families, central
//! characters and simplicity.

use serde::{Deserialize, Serialize};

use crate::algebras::jackson;
use crate::centre::centre_params;
use crate::commpoly::CommPoly;
use crate::cyclotomic::{q_int, CycElem};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::ncalg::{eval_rep, NcPoly, Presentation};


/// Generator matrices for a presentation.
#[derive(Clone, Debug)]
pub struct Representation {
    pub presentation: Presentation,
    pub mats: Vec<Matrix>,
}

#[derive(Serialize, Deserialize)]
struct RepresentationJson {
    family: String,
    dim: usize,
    /// literals in the matrices are elements of ℚ(ζ_order)
    order: u32,
    presentation: serde_json::Value,
    matrices: Vec<Vec<Vec<String>>>,
}

impl Serialize for Representation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let order = self.mats.iter().fold(self.order(), |o, m| num_integer::lcm(o, m.literal_order()));
        let matrices = self
            .mats
            .iter()
            .map(|m| {
                m.to_rows()
                    .iter()
                    .map(|r| r.iter().map(|x| x.embed(order).expect("lcm order").to_string()).collect())
                    .collect()
            })
            .collect();
        let presentation = serde_json::from_str(&self.presentation.to_json()).map_err(serde::ser::Error::custom)?;
        RepresentationJson {
            family: self.presentation.family().to_string(),
            dim: self.dim(),
            order,
            presentation,
            matrices,
        }
        .serialize(s)
    }
}

impl Representation {
    pub fn new(presentation: Presentation, mats: Vec<Matrix>) -> Result<Self> {
        if mats.len() != presentation.ngens() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for {} generators",
                mats.len(),
                presentation.ngens()
            )));
        }
        let d = mats[0].rows();
        if mats.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::InvalidRepresentation("matrices are not all d×d".into()));
        }
        Ok(Representation { presentation, mats })
    }

    pub fn dim(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialisable")
    }

    /// Reads the format written by [`Representation::to_json`].
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: RepresentationJson = serde_json::from_str(s)?;
        let presentation = Presentation::from_json(&doc.presentation.to_string())?;
        let mats = doc
            .matrices
            .iter()
            .map(|rows| Matrix::from_literals(rows, doc.order))
            .collect::<Result<Vec<_>>>()?;
        let rep = Representation::new(presentation, mats)?;
        if rep.dim() != doc.dim {
            return Err(Error::DimensionMismatch(format!("dim {} but matrices are {}×{}", doc.dim, rep.dim(), rep.dim())));
        }
        Ok(rep)
    }

    pub fn order(&self) -> u32 {
        self.mats
            .iter()
            .fold(self.presentation.order(), |o, m| num_integer::lcm(o, m.order()))
    }

    pub fn act(&self, p: &NcPoly) -> Result<Matrix> {
        eval_rep(p, &self.mats)
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        let (d1, d2) = (self.dim(), other.dim());
        let order = num_integer::lcm(self.order(), other.order());
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(d1 + d2, d1 + d2, order);
                for i in 0..d1 {
                    for j in 0..d1 {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..d2 {
                    for j in 0..d2 {
                        m.set(d1 + i, d1 + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Representation::new(self.presentation.clone(), mats)
    }

    /// ρ'(g) = P ρ(g) P⁻¹.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation> {
        let pinv = p.inverse()?;
        let mats = self
            .mats
            .iter()
            .map(|m| p.mul(m)?.mul(&pinv))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.presentation.clone(), mats)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepCheck {
    pub holds: bool,
    /// (relation index, defect matrix) for each failing relation
    pub defects: Vec<(usize, Matrix)>,
}

pub fn verify_rep(rep: &Representation) -> Result<RepCheck> {
    let mut defects = Vec::new();
    for (i, rel) in rep.presentation.relations().iter().enumerate() {
        let m = rep.act(rel)?;
        if !m.is_zero() {
            defects.push((i, m));
        }
    }
    Ok(RepCheck { holds: defects.is_empty(), defects })
}

/// 1-dimensional representation e₀ ↦ a₀, e₁ ↦ b, e₂ ↦ c of 𝒥_x(r).
pub fn point_rep(n: usize, r: i64, x: &CycElem, point: [CycElem; 3]) -> Result<Representation> {
    let p = jackson(n, r, x)?;
    let mats = point.iter().map(|c| Matrix::scalar(1, c)).collect();
    Representation::new(p, mats)
}

/// Closed-form description of the one-dimensional locus of 𝒥_x(r).
pub fn one_dim_points(n: usize, r: i64, x: &CycElem, point: &[CycElem; 3]) -> bool {
    let [a0, b, c] = point;
    let z = |k: i64| CycElem::zeta(n as u32, k);
    if z(r).is_one() {
        // e₂e₁ − e₁e₂ = x e₀
        return x.is_zero() || a0.is_zero();
    }
    if z(2 * r).is_one() {
        // anticommuting e₀: 2a₀b = 2a₀c = 0, x a₀ = 0
        if !x.is_zero() {
            return a0.is_zero();
        }
        return a0.is_zero() || (b.is_zero() && c.is_zero());
    }
    if a0.is_zero() {
        return &(b * c) == x;
    }
    if !b.is_zero() || !c.is_zero() {
        return false;
    }
    x.is_zero() || a0 == &(&z(2 * r) - &CycElem::one(1))
}

/// ψ_i for the torsion family: x(a[i]_{ζʳ}ζ^{r(i−1)} + 1 − ζ^{2ri}).
pub fn torsion_psi(n: usize, r: i64, x: &CycElem, a: &CycElem, i: usize) -> CycElem {
    let zr = CycElem::zeta(n as u32, r);
    let ii = i as i64;
    let t = &(&(a * &q_int(i as u32, &zr)) * &CycElem::zeta(n as u32, r * (ii - 1)))
        + &(&CycElem::one(1) - &CycElem::zeta(n as u32, 2 * r * ii));
    x * &t
}

/// Least d ≥ 1 with ψ_d(a) = 0, bounded by `2n`; `None` if no such d exists in range.
/// For x = 0 every ψ vanishes and the answer is 1.
pub fn torsion_minimality(n: usize, r: i64, x: &CycElem, a: &CycElem) -> Option<usize> {
    (1..=2 * n).find(|&d| torsion_psi(n, r, x, a, d).is_zero())
}

/// The value of a forced by ψ_d(a) = 0, when [d]_{ζʳ} ≠ 0.
pub fn forced_torsion_parameter(n: usize, r: i64, d: usize) -> Option<CycElem> {
    let zr = CycElem::zeta(n as u32, r);
    let qd = q_int(d as u32, &zr);
    if qd.is_zero() {
        return None;
    }
    let den = &qd * &CycElem::zeta(n as u32, r * (d as i64 - 1));
    let num = &CycElem::zeta(n as u32, 2 * r * d as i64) - &CycElem::one(1);
    num.checked_div(&den).ok()
}

fn shift_down(d: usize, corner: &CycElem, order: u32) -> Matrix {
    let mut m = Matrix::zeros(d, d, order);
    for i in 0..d.saturating_sub(1) {
        m.set(i + 1, i, CycElem::one(order));
    }
    if d > 0 && !corner.is_zero() {
        m.set(0, d - 1, corner.clone());
    }
    m
}

fn diag_e0(n: usize, r: i64, a: &CycElem, d: usize, order: u32) -> Matrix {
    let mut m = Matrix::zeros(d, d, order);
    for i in 0..d {
        m.set(i, i, a * &CycElem::zeta(n as u32, r * i as i64));
    }
    m
}

/// Torsion module of dimension d: e₀ = diag(ζ^{ri}a), e₁ shifts v_i ↦ v_{i+1}
/// (v_{d−1} ↦ 0), e₂ v_i = ψ_i v_{i−1}.
pub fn torsion_module(n: usize, r: i64, d: usize, x: &CycElem, a: Option<&CycElem>) -> Result<Representation> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    let a = match a {
        Some(a) => a.clone(),
        None => {
            if x.is_zero() {
                return Err(Error::InvalidParameter("a is free when x = 0; supply it".into()));
            }
            forced_torsion_parameter(n, r, d).ok_or_else(|| {
                Error::InvalidParameter(format!("a is not determined for d = {d}; supply it"))
            })?
        }
    };
    if !x.is_zero() {
        if !torsion_psi(n, r, x, &a, d).is_zero() {
            return Err(Error::InvalidParameter(format!("ψ_{d}(a) ≠ 0: a = {a} is inconsistent with d = {d}")));
        }
        if let Some(m) = torsion_minimality(n, r, x, &a) {
            if m < d {
                return Err(Error::InvalidParameter(format!("d = {d} is not minimal; minimal d' = {m}")));
            }
        }
    }
    let p = jackson(n, r, x)?;
    let order = num_integer::lcm(p.order(), a.order());
    let e0 = diag_e0(n, r, &a, d, order);
    let e1 = shift_down(d, &CycElem::zero(order), order);
    let mut e2 = Matrix::zeros(d, d, order);
    for i in 1..d {
        e2.set(i - 1, i, torsion_psi(n, r, x, &a, i));
    }
    Representation::new(p, vec![e0, e1, e2])
}

/// ψ_i for the torsion-free family: ζ^{2r(i−1)}b + x(aζ^{r(i−1)}(1 − ζʳ)⁻¹ + 1).
pub fn torsion_free_psi(n: usize, r: i64, x: &CycElem, a: &CycElem, b: &CycElem, i: usize) -> Result<CycElem> {
    let ii = i as i64 - 1;
    let z = |k: i64| CycElem::zeta(n as u32, k);
    let inv = (&CycElem::one(1) - &z(r)).inv()?;
    let lin = &(&(a * &z(r * ii)) * &inv) + &CycElem::one(1);
    Ok(&(&z(2 * r * ii) * b) + &(x * &lin))
}

/// Dimension of the torsion-free module: least s with ζ^{rs} = 1 when a ≠ 0 and
/// ζ^{2rs} = 1 when b ≠ 0.
pub fn torsion_free_size(n: usize, r: i64, a: &CycElem, b: &CycElem) -> usize {
    (1..=n)
        .find(|&s| {
            let s = s as i64;
            (a.is_zero() || CycElem::zeta(n as u32, r * s).is_one())
                && (b.is_zero() || CycElem::zeta(n as u32, 2 * r * s).is_one())
        })
        .unwrap_or(n)
}

/// Torsion-free module: e₁ cyclic shift with corner c, e₂ v_i = ψ_i v_{i−1},
/// e₂ v₀ = c⁻¹ψ_s v_{s−1}, e₀ = diag(ζ^{ri}a).
pub fn torsion_free_module(n: usize, r: i64, x: &CycElem, a: &CycElem, b: &CycElem, c: &CycElem) -> Result<Representation> {
    if c.is_zero() {
        return Err(Error::InvalidParameter("c must be nonzero".into()));
    }
    if CycElem::zeta(n as u32, r).is_one() {
        return Err(Error::InvalidParameter("ζ^r = 1".into()));
    }
    let s = torsion_free_size(n, r, a, b);
    let p = jackson(n, r, x)?;
    let order = [a, b, c].iter().fold(p.order(), |o, v| num_integer::lcm(o, v.order()));
    let e0 = diag_e0(n, r, a, s, order);
    let e1 = if s == 1 { Matrix::scalar(1, c) } else { shift_down(s, c, order) };
    let mut e2 = Matrix::zeros(s, s, order);
    for i in 1..s {
        e2.set(i - 1, i, torsion_free_psi(n, r, x, a, b, i)?);
    }
    let corner = &c.inv()? * &torsion_free_psi(n, r, x, a, b, s)?;
    let prev = e2.get(s - 1, 0).clone();
    e2.set(s - 1, 0, &prev + &corner);
    Representation::new(p, vec![e0, e1, e2])
}

/// Predicted z-coordinate numerator ∏ᵢ ψᵢ(a, b) in the variables (a, b),
/// so that u₂ acts by c⁻¹ times its value.
pub fn torsion_free_product_poly(n: usize, r: i64, x: &CycElem, s: usize) -> Result<CommPoly> {
    let names = vec!["a".to_string(), "b".to_string()];
    let z = |k: i64| CycElem::zeta(n as u32, k);
    let inv = (&CycElem::one(1) - &z(r)).inv()?;
    let mut acc = CommPoly::constant(names.clone(), CycElem::one(1));
    for i in 1..=s {
        let ii = i as i64 - 1;
        let psi = CommPoly::var(names.clone(), 1)
            .scale(&z(2 * r * ii))
            .add(&CommPoly::var(names.clone(), 0).scale(&(&(x * &z(r * ii)) * &inv)))
            .add(&CommPoly::constant(names.clone(), x.clone()));
        acc = acc.mul(&psi);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralCharacter {
    pub exponent: u64,
    /// values of e₀ˡ, e₁ˡ, e₂ˡ
    pub values: [CycElem; 3],
    /// value of wᵗ when x = 0
    pub w_power: Option<CycElem>,
}

fn scalar_of(m: &Matrix) -> Option<CycElem> {
    let c = m.get(0, 0).clone();
    (m == &Matrix::scalar(m.rows(), &c)).then_some(c)
}

/// Values of the centre generators e_iˡ (and wᵗ when x = 0) on a Jackson representation.
pub fn central_character(rep: &Representation) -> Result<CentralCharacter> {
    let params = rep.presentation.params();
    let (n, r) = match (params.n, params.r) {
        (Some(n), Some(r)) => (n, r),
        _ => return Err(Error::InvalidRepresentation("not a Jackson representation".into())),
    };
    let x = params.x.clone().unwrap_or_else(|| CycElem::zero(1));
    let cp = centre_params(n, r)?;
    let mut values = Vec::new();
    for g in 0..3 {
        let m = rep.mats[g].pow(cp.l as u32)?;
        values.push(scalar_of(&m).ok_or_else(|| {
            Error::NotCentral(format!("e{g}^{} does not act by a scalar", cp.l))
        })?);
    }
    let w_power = if x.is_zero() {
        let w = rep.mats[1].mul(&rep.mats[2])?;
        let m = w.pow(cp.t as u32)?;
        Some(scalar_of(&m).ok_or_else(|| Error::NotCentral("w^t does not act by a scalar".into()))?)
    } else {
        None
    };
    Ok(CentralCharacter {
        exponent: cp.l,
        values: [values[0].clone(), values[1].clone(), values[2].clone()],
        w_power,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Simplicity {
    AbsolutelySimple,
    SimpleByEigenanalysis,
    NotSimple,
    Undetermined,
}

/// Burnside: the algebra generated by the ρ(e_i) is all of M_d. Falls back to an
/// exact invariant-subspace analysis when ρ(e₀) is diagonal with distinct entries.
pub fn simplicity(rep: &Representation) -> Result<Simplicity> {
    let d = rep.dim();
    let order = rep.order();
    let target = d * d;
    let mut span = EchelonBasis::new();
    span.insert(&Matrix::identity(d, order).to_vec());
    let mut frontier = vec![Matrix::identity(d, order)];
    while !frontier.is_empty() && span.rank() < target {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &rep.mats {
                let cand = g.mul(m)?;
                if span.insert(&cand.to_vec()) {
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    let rank = span.rank();
    if rank == target {
        return Ok(Simplicity::AbsolutelySimple);
    }
    // ρ(e₀) diagonal with distinct entries: submodules are spans of basis vectors
    let e0 = &rep.mats[0];
    let diag_distinct = (0..d).all(|i| (0..d).all(|j| i == j || e0.get(i, j).is_zero()))
        && (0..d).all(|i| (0..i).all(|j| e0.get(i, i) != e0.get(j, j)));
    if !diag_distinct {
        return Ok(Simplicity::Undetermined);
    }
    // reachability from each basis vector must be everything
    for start in 0..d {
        let mut seen = vec![false; d];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for g in &rep.mats {
                for (j, s) in seen.iter_mut().enumerate() {
                    if !*s && !g.get(j, i).is_zero() {
                        *s = true;
                        stack.push(j);
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Ok(Simplicity::NotSimple);
        }
    }
    Ok(Simplicity::SimpleByEigenanalysis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> CycElem {
        CycElem::from_int(1, k)
    }

    fn z3(k: i64) -> CycElem {
        CycElem::zeta(3, k)
    }

    #[test]
    fn one_dim_locus_matches_relations() {
        let x = c(1);
        let pts = [
            [c(0), c(2), CycElem::from_frac(1, 1, 2)],
            [&z3(2) - &c(1), c(0), c(0)],
            [c(0), c(1), c(1)],
            [c(1), c(0), c(0)],
        ];
        for pt in &pts {
            let rep = point_rep(3, 1, &x, pt.clone()).unwrap();
            assert_eq!(one_dim_points(3, 1, &x, pt), verify_rep(&rep).unwrap().holds);
        }
        assert!(!one_dim_points(3, 1, &c(2), &[c(0), c(1), c(1)]));
    }

    #[test]
    fn torsion_n3() {
        let a = c(5);
        let m = torsion_module(3, 1, 3, &c(1), Some(&a)).unwrap();
        assert!(verify_rep(&m).unwrap().holds);
        // ψ₁ = a + ζ + 2, ψ₂ = 1 − a − ζ
        assert_eq!(m.mats[2].get(0, 1), &(&(&a + &z3(1)) + &c(2)));
        assert_eq!(m.mats[2].get(1, 2), &(&(&c(1) - &a) - &z3(1)));
        let ch = central_character(&m).unwrap();
        assert_eq!(ch.values, [a.powu(3), c(0), c(0)]);
        assert_eq!(simplicity(&m).unwrap(), Simplicity::AbsolutelySimple);
    }

    #[test]
    fn torsion_minimal_dimension() {
        assert_eq!(torsion_minimality(3, 1, &c(1), &(&z3(2) - &c(1))), Some(1));
        assert_eq!(torsion_minimality(3, 1, &c(1), &c(5)), Some(3));
        assert_eq!(torsion_minimality(3, 1, &c(0), &c(5)), Some(1));
        let m = torsion_module(3, 1, 1, &c(1), None).unwrap();
        assert_eq!(m.mats[0].get(0, 0), &(&z3(2) - &c(1)));
        assert!(torsion_module(3, 1, 3, &c(1), Some(&(&z3(2) - &c(1)))).is_err());
        let zero = torsion_module(4, 1, 3, &c(0), Some(&c(2))).unwrap();
        assert!(zero.mats[2].is_zero());
    }

    #[test]
    fn torsion_free_n3() {
        let (a, b, cc) = (c(2), c(3), z3(1));
        let m = torsion_free_module(3, 1, &c(1), &a, &b, &cc).unwrap();
        assert_eq!(m.dim(), 3);
        assert!(verify_rep(&m).unwrap().holds);
        // ψ₁ = (⅓ζ + ⅔)a + b + 1
        let psi1 = &(&(&CycElem::parse("1/3*z + 2/3", 3).unwrap() * &a) + &b) + &c(1);
        assert_eq!(m.mats[2].get(0, 1), &psi1);
        let ch = central_character(&m).unwrap();
        assert_eq!(ch.values[1], cc);
        assert_eq!(simplicity(&m).unwrap(), Simplicity::AbsolutelySimple);
    }

    #[test]
    fn direct_sum_not_simple() {
        let p = point_rep(3, 1, &c(1), [c(0), c(1), c(1)]).unwrap();
        let q = point_rep(3, 1, &c(1), [c(0), c(2), CycElem::from_frac(1, 1, 2)]).unwrap();
        let s = p.direct_sum(&q).unwrap();
        assert!(verify_rep(&s).unwrap().holds);
        assert_ne!(simplicity(&s).unwrap(), Simplicity::AbsolutelySimple);
    }
}
