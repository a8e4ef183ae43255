//! Ext¹ between finite-dimensional representations, computed as
//! derivations into Hom(M, N) modulo inner derivations.

use serde::Serialize;

use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::modules::{central_character, point_rep, torsion_free_module, verify_rep, Representation};

#[derive(Clone, Debug, Serialize)]
pub struct ExtResult {
    pub dim: usize,
    pub inner_dim: usize,
    pub solution_dim: usize,
    /// dim Hom_A(M, N), the kernel of θ ↦ ad_θ
    pub hom_dim: usize,
    /// one tuple (D₀, D₁, …) per basis derivation, complementing the inner ones
    pub basis: Vec<Vec<Matrix>>,
}

/// Unknown index of entry (i, j) of D_g, D_g ∈ Hom(M, N) of shape dN × dM.
fn unknown(g: usize, i: usize, j: usize, dn: usize, dm: usize) -> usize {
    g * dn * dm + i * dm + j
}

fn unflatten(v: &[CycElem], ngens: usize, dn: usize, dm: usize, order: u32) -> Vec<Matrix> {
    (0..ngens)
        .map(|g| {
            let mut m = Matrix::zeros(dn, dm, order);
            for i in 0..dn {
                for j in 0..dm {
                    m.set(i, j, v[unknown(g, i, j, dn, dm)].clone());
                }
            }
            m
        })
        .collect()
}

fn word_matrix(rep: &Representation, w: &[usize], order: u32) -> Result<Matrix> {
    let mut m = Matrix::identity(rep.dim(), order);
    for &g in w {
        m = m.mul(&rep.mats[g])?;
    }
    Ok(m)
}

/// Linear constraints on (D_g) from the Leibniz expansion of every relation.
fn constraint_matrix(m: &Representation, n: &Representation) -> Result<Matrix> {
    let (dm, dn) = (m.dim(), n.dim());
    let ngens = m.presentation.ngens();
    let order = num_integer::lcm(m.order(), n.order());
    let rels = m.presentation.relations();
    let unknowns = ngens * dn * dm;
    let mut rows: Vec<Vec<CycElem>> = Vec::new();
    for rel in &rels {
        // block[i][j] is a row over the unknowns for entry (i, j) of δ(rel)
        let mut block = vec![vec![CycElem::zero(order); unknowns]; dn * dm];
        for (w, c) in rel.terms() {
            let ix = w.indices();
            for k in 0..ix.len() {
                let left = word_matrix(n, &ix[..k], order)?.scale(c);
                let right = word_matrix(m, &ix[k + 1..], order)?;
                let g = ix[k];
                // entry (i, j) of left·D·right = Σ_{p,q} left[i,p] D[p,q] right[q,j]
                for i in 0..dn {
                    for p in 0..dn {
                        let l = left.get(i, p);
                        if l.is_zero() {
                            continue;
                        }
                        for q in 0..dm {
                            for j in 0..dm {
                                let rr = right.get(q, j);
                                if rr.is_zero() {
                                    continue;
                                }
                                let cell = &mut block[i * dm + j][unknown(g, p, q, dn, dm)];
                                *cell += &(l * rr);
                            }
                        }
                    }
                }
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, unknowns, order));
    }
    Matrix::from_rows(rows, order)
}

/// Vectors ad_θ for θ running over the matrix units of Hom(M, N).
fn inner_derivations(m: &Representation, n: &Representation) -> Result<Vec<Vec<CycElem>>> {
    let (dm, dn) = (m.dim(), n.dim());
    let ngens = m.presentation.ngens();
    let order = num_integer::lcm(m.order(), n.order());
    let mut out = Vec::new();
    for i in 0..dn {
        for j in 0..dm {
            let mut theta = Matrix::zeros(dn, dm, order);
            theta.set(i, j, CycElem::one(order));
            let mut v = vec![CycElem::zero(order); ngens * dn * dm];
            for g in 0..ngens {
                let ad = n.mats[g].mul(&theta)?.sub(&theta.mul(&m.mats[g])?)?;
                for p in 0..dn {
                    for q in 0..dm {
                        v[unknown(g, p, q, dn, dm)] = ad.get(p, q).clone();
                    }
                }
            }
            out.push(v);
        }
    }
    Ok(out)
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<ExtResult> {
    if m.presentation != n.presentation {
        return Err(Error::DimensionMismatch("representations of different presentations".into()));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let ngens = m.presentation.ngens();
    let order = num_integer::lcm(m.order(), n.order());
    let cons = constraint_matrix(m, n)?;
    let kernel = if cons.rows() == 0 {
        let u = ngens * dn * dm;
        (0..u)
            .map(|k| {
                let mut v = vec![CycElem::zero(order); u];
                v[k] = CycElem::one(order);
                v
            })
            .collect()
    } else {
        cons.kernel()
    };
    let inner = inner_derivations(m, n)?;
    let mut span = EchelonBasis::new();
    for v in &inner {
        span.insert(v);
    }
    let inner_dim = span.rank();
    let mut basis = Vec::new();
    for v in &kernel {
        if span.insert(v) {
            basis.push(unflatten(v, ngens, dn, dm, order));
        }
    }
    Ok(ExtResult {
        dim: kernel.len() - inner_dim,
        inner_dim,
        solution_dim: kernel.len(),
        hom_dim: dn * dm - inner_dim,
        basis,
    })
}

/// Block matrices [[ρ_N(g), δ_g], [0, ρ_M(g)]].
pub fn extension_rep(m: &Representation, n: &Representation, delta: &[Matrix]) -> Result<Representation> {
    let (dm, dn) = (m.dim(), n.dim());
    let order = delta
        .iter()
        .fold(num_integer::lcm(m.order(), n.order()), |o, d| num_integer::lcm(o, d.order()));
    let mats = (0..m.presentation.ngens())
        .map(|g| {
            let mut b = Matrix::zeros(dn + dm, dn + dm, order);
            for i in 0..dn {
                for j in 0..dn {
                    b.set(i, j, n.mats[g].get(i, j).clone());
                }
                for j in 0..dm {
                    b.set(i, dn + j, delta[g].get(i, j).clone());
                }
            }
            for i in 0..dm {
                for j in 0..dm {
                    b.set(dn + i, dn + j, m.mats[g].get(i, j).clone());
                }
            }
            b
        })
        .collect();
    Representation::new(m.presentation.clone(), mats)
}

/// Every basis derivation gives a verified extension, and conjugating the split
/// extension by [[I, θ], [0, I]] gives the extension of an inner derivation.
pub fn ext1_oracle(m: &Representation, n: &Representation, result: &ExtResult) -> Result<bool> {
    for delta in &result.basis {
        if !verify_rep(&extension_rep(m, n, delta)?)?.holds {
            return Ok(false);
        }
    }
    let (dm, dn) = (m.dim(), n.dim());
    let order = num_integer::lcm(m.order(), n.order());
    let zero: Vec<Matrix> = (0..m.presentation.ngens()).map(|_| Matrix::zeros(dn, dm, order)).collect();
    let split = extension_rep(m, n, &zero)?;
    if !verify_rep(&split)?.holds {
        return Ok(false);
    }
    for i in 0..dn {
        for j in 0..dm {
            let mut p = Matrix::identity(dn + dm, order);
            p.set(i, dn + j, CycElem::one(order));
            let conj = split.conjugate(&p)?;
            if !verify_rep(&conj)?.holds {
                return Ok(false);
            }
            // the off-diagonal block is θρ_M − ρ_Nθ
            let mut theta = Matrix::zeros(dn, dm, order);
            theta.set(i, j, CycElem::one(order));
            for g in 0..m.presentation.ngens() {
                let expect = theta.mul(&m.mats[g])?.sub(&n.mats[g].mul(&theta)?)?;
                for a in 0..dn {
                    for b in 0..dm {
                        if conj.mats[g].get(a, dn + b) != expect.get(a, b) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub case: String,
    pub first: [CycElem; 3],
    pub second: [CycElem; 3],
    pub dim: usize,
    pub inner_dim: usize,
    /// value the stated tables give for this case
    pub expected: usize,
    pub expected_inner: usize,
}

impl SweepRow {
    pub fn matches(&self) -> bool {
        self.dim == self.expected && self.inner_dim == self.expected_inner
    }
}

fn pt(b: &CycElem, c: &CycElem) -> [CycElem; 3] {
    [CycElem::zero(1), b.clone(), c.clone()]
}

/// Ext¹ between 1-dimensional points P(b, c) = (0, b, c) of 𝒥_x(r) on a fixed grid
/// covering every case of the stated tables, each at least twice.
pub fn ext1_sweep_one_dim(n: usize, r: i64, x: &CycElem) -> Result<Vec<SweepRow>> {
    let z = |k: i64| CycElem::zeta(n as u32, k);
    let q = z(r);
    let q2 = z(2 * r);
    let int = |k: i64| CycElem::from_int(1, k);
    let mut pairs: Vec<(String, [CycElem; 3], [CycElem; 3], usize)> = Vec::new();
    if !q2.is_one() {
        if !x.is_zero() {
            // points on bc = x
            for b in [int(2), int(3)] {
                let c = x.checked_div(&b)?;
                // (b, c) vs (e, f) with b = ζe, f = ζc
                let e = b.checked_div(&q)?;
                pairs.push(("b=ζe, f=ζc".into(), pt(&b, &c), pt(&e, &(&q * &c)), 1));
                let e = b.checked_div(&q2)?;
                pairs.push(("b=ζ²e, f=ζ²c".into(), pt(&b, &c), pt(&e, &(&q2 * &c)), 1));
                pairs.push(("equal".into(), pt(&b, &c), pt(&b, &c), 1));
                let e = int(5) * b.clone();
                pairs.push(("generic".into(), pt(&b, &c), pt(&e, &x.checked_div(&e)?), 0));
            }
        } else {
            for b in [int(2), int(3)] {
                // axis points (b, 0) and (0, c)
                let e = b.checked_div(&q2)?;
                pairs.push(("b=ζ²e, f=ζ²c".into(), pt(&b, &int(0)), pt(&e, &int(0)), 1));
                pairs.push(("b=ζ²e, f=ζ²c".into(), pt(&int(0), &b), pt(&int(0), &(&q2 * &b)), 1));
                pairs.push(("generic".into(), pt(&b, &int(0)), pt(&int(0), &int(7)), 0));
                pairs.push(("generic".into(), pt(&b, &int(0)), pt(&(int(5) * b.clone()), &int(0)), 0));
                pairs.push(("equal off origin".into(), pt(&b, &int(0)), pt(&b, &int(0)), 0));
            }
            for _ in 0..2 {
                pairs.push(("origin".into(), pt(&int(0), &int(0)), pt(&int(0), &int(0)), 2));
            }
        }
    } else if !x.is_zero() {
        // plane e₀ = 0
        for (b, c) in [(int(2), int(3)), (int(1), int(5))] {
            pairs.push(("equal".into(), pt(&b, &c), pt(&b, &c), 1));
            pairs.push(("(−b,−c)".into(), pt(&b, &c), pt(&-b.clone(), &-c.clone()), 0));
            pairs.push(("generic".into(), pt(&b, &c), pt(&(int(3) * b.clone()), &c), 0));
        }
    } else {
        for (b, c) in [(int(2), int(3)), (int(1), int(5))] {
            pairs.push(("equal".into(), pt(&b, &c), pt(&b, &c), 1));
            pairs.push(("(−b,−c)".into(), pt(&b, &c), pt(&-b.clone(), &-c.clone()), 1));
            pairs.push(("(b,−c)".into(), pt(&b, &c), pt(&b, &-c.clone()), 1));
            pairs.push(("(−b,c)".into(), pt(&b, &c), pt(&-b.clone(), &c), 1));
            pairs.push(("generic".into(), pt(&b, &c), pt(&(int(3) * b.clone()), &c), 0));
        }
    }
    let mut out = Vec::new();
    for (case, p1, p2, expected) in pairs {
        let m = point_rep(n, r, x, p1.clone())?;
        let nn = point_rep(n, r, x, p2.clone())?;
        if !verify_rep(&m)?.holds || !verify_rep(&nn)?.holds {
            return Err(Error::InvalidRepresentation(format!("grid point off the locus in case {case}")));
        }
        let res = ext1(&m, &nn)?;
        let expected_inner = if p1 == p2 { 0 } else { 1 };
        out.push(SweepRow {
            case,
            first: p1,
            second: p2,
            dim: res.dim,
            inner_dim: res.inner_dim,
            expected,
            expected_inner,
        });
    }
    Ok(out)
}

/// The three torsion-free modules over ℚ(ζ₃) with x = 1, r = 1, a = 0, c = ζ₃ and
/// b = 2ζ₃ⁱ, and their pairwise Ext¹ dimensions.
pub fn worked_modules() -> Result<Vec<Representation>> {
    let z = |k: i64| CycElem::zeta(3, k);
    (0..3)
        .map(|i| {
            torsion_free_module(3, 1, &CycElem::one(3), &CycElem::zero(3), &(&CycElem::from_int(3, 2) * &z(i)), &z(1))
        })
        .collect()
}

pub fn ext1_worked_table() -> Result<Vec<Vec<usize>>> {
    let mods = worked_modules()?;
    let mut table = vec![vec![0; 3]; 3];
    for (i, m) in mods.iter().enumerate() {
        for (j, n) in mods.iter().enumerate() {
            table[i][j] = ext1(m, n)?.dim;
        }
    }
    Ok(table)
}

/// A torsion-free module sharing u₀ = 0 and u₁ = ζ₃ with the modules above but with a
/// different u₂, to compare against them.
pub fn worked_offline_module() -> Result<Representation> {
    torsion_free_module(3, 1, &CycElem::one(3), &CycElem::zero(3), &CycElem::from_int(3, 1), &CycElem::zeta(3, 1))
}

/// Pairs of verified family modules with unequal central characters, with their Ext¹ dimension.
pub fn muller_pairs(mods: &[Representation]) -> Result<Vec<(usize, usize, usize)>> {
    let chars = mods.iter().map(central_character).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for i in 0..mods.len() {
        for j in 0..mods.len() {
            if i != j && chars[i] != chars[j] {
                out.push((i, j, ext1(&mods[i], &mods[j])?.dim));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> CycElem {
        CycElem::from_int(1, k)
    }

    #[test]
    fn generic_points_have_no_extensions() {
        let m = point_rep(3, 1, &c(1), [c(0), c(2), CycElem::from_frac(1, 1, 2)]).unwrap();
        let n = point_rep(3, 1, &c(1), [c(0), c(7), CycElem::from_frac(1, 1, 7)]).unwrap();
        let res = ext1(&m, &n).unwrap();
        assert_eq!(res.dim, 0);
        assert_eq!(res.inner_dim, 1);
        assert!(ext1_oracle(&m, &n, &res).unwrap());
    }

    #[test]
    fn rotated_point_has_one_extension() {
        let q = CycElem::zeta(3, 1);
        let b = c(2);
        let cc = CycElem::from_frac(1, 1, 2);
        let m = point_rep(3, 1, &c(1), [c(0), b.clone(), cc.clone()]).unwrap();
        let e = b.checked_div(&q).unwrap();
        let n = point_rep(3, 1, &c(1), [c(0), e, &q * &cc]).unwrap();
        let res = ext1(&m, &n).unwrap();
        assert_eq!(res.dim, 1);
        assert!(ext1_oracle(&m, &n, &res).unwrap());
    }

    #[test]
    fn oracle_rejects_non_derivations() {
        let m = point_rep(3, 1, &c(1), [c(0), c(2), CycElem::from_frac(1, 1, 2)]).unwrap();
        let bogus = ExtResult {
            dim: 1,
            inner_dim: 0,
            solution_dim: 1,
            hom_dim: 1,
            basis: vec![vec![Matrix::scalar(1, &c(1)), Matrix::scalar(1, &c(0)), Matrix::scalar(1, &c(0))]],
        };
        assert!(!ext1_oracle(&m, &m, &bogus).unwrap());
    }

    #[test]
    fn basis_change_invariance() {
        let mods = worked_modules().unwrap();
        let p = Matrix::from_rows(
            vec![
                vec![c(1), c(2), c(0)],
                vec![c(0), c(1), c(3)],
                vec![c(1), c(0), c(1)],
            ],
            3,
        )
        .unwrap();
        let a = ext1(&mods[0], &mods[1]).unwrap().dim;
        let m2 = mods[0].conjugate(&p).unwrap();
        let n2 = mods[1].conjugate(&p).unwrap();
        assert_eq!(ext1(&m2, &n2).unwrap().dim, a);
    }
}
