//! Finite-dimensional algebras given by structure constants: centre,
//! radical (via the trace form), semisimple quotient and classification.

use serde::Serialize;

use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Sparse row of coordinates.
pub type SparseVec = Vec<(usize, CycElem)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    order: u32,
    labels: Vec<String>,
    products: Vec<SparseVec>,
    unit: Vec<CycElem>,
    generators: Vec<(String, Vec<CycElem>)>,
}

/// Outcome of [`FinDimAlgebra::classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: FibreKind,
    pub dim: usize,
    pub radical_dim: usize,
    pub centre_dim: usize,
    pub semisimple_dim: usize,
    pub semisimple_centre_dim: usize,
    /// Images of the named generators in the semisimple quotient basis.
    pub generator_images: Vec<(String, Vec<CycElem>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FibreKind {
    Azumaya,
    Ramified,
}

fn is_square(n: usize) -> bool {
    let r = (n as f64).sqrt().round() as usize;
    r * r == n
}

impl FinDimAlgebra {
    /// `products[i * dim + j]` holds the coordinates of b_i b_j.
    pub fn new(order: u32, labels: Vec<String>, products: Vec<SparseVec>, unit: Vec<CycElem>) -> Result<Self> {
        let dim = labels.len();
        if products.len() != dim * dim || unit.len() != dim {
            return Err(Error::DimensionMismatch("structure constants".into()));
        }
        let a = FinDimAlgebra {
            order,
            labels,
            products,
            unit,
            generators: Vec::new(),
        };
        for i in 0..dim {
            let b = a.basis(i);
            if a.mul(&a.unit, &b) != b || a.mul(&b, &a.unit) != b {
                return Err(Error::InvalidAlgebra(format!("unit law fails on {}", a.labels[i])));
            }
        }
        Ok(a)
    }

    pub fn with_generators(mut self, generators: Vec<(String, Vec<CycElem>)>) -> Self {
        self.generators = generators;
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[CycElem] {
        &self.unit
    }

    pub fn generators(&self) -> &[(String, Vec<CycElem>)] {
        &self.generators
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    pub fn basis(&self, i: usize) -> Vec<CycElem> {
        let mut v = self.zero_vec();
        v[i] = CycElem::one(self.order);
        v
    }

    pub fn zero_vec(&self) -> Vec<CycElem> {
        vec![CycElem::zero(self.order); self.dim()]
    }

    pub fn mul(&self, u: &[CycElem], v: &[CycElem]) -> Vec<CycElem> {
        let n = self.dim();
        let mut out = self.zero_vec();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for (k, s) in self.product(i, j) {
                    out[*k] += &(&c * s);
                }
            }
        }
        out
    }

    /// Basis triples (i, j, k) where (b_i b_j) b_k ≠ b_i (b_j b_k); `stride` > 1 samples.
    pub fn associativity_failures(&self, stride: usize) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let stride = stride.max(1);
        let mut out = Vec::new();
        let mut idx = 0usize;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    idx += 1;
                    if !idx.is_multiple_of(stride) {
                        continue;
                    }
                    let l = self.mul(&self.mul(&self.basis(i), &self.basis(j)), &self.basis(k));
                    let r = self.mul(&self.basis(i), &self.mul(&self.basis(j), &self.basis(k)));
                    if l != r {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mul(&self.basis(i), &self.basis(j)) == self.mul(&self.basis(j), &self.basis(i))))
    }

    /// Basis of {z : z b = b z for every basis element b}.
    pub fn centre_basis(&self) -> Vec<Vec<CycElem>> {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            // row m of the block: Σ_k z_k (c_{ki}^m − c_{ik}^m)
            let mut block = vec![vec![CycElem::zero(self.order); n]; n];
            for k in 0..n {
                for (m, c) in self.product(k, i) {
                    block[*m][k] += c;
                }
                for (m, c) in self.product(i, k) {
                    block[*m][k] -= c;
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
        }
        if rows.is_empty() {
            return (0..n).map(|i| self.basis(i)).collect();
        }
        Matrix::from_rows(rows, self.order).expect("rectangular").kernel()
    }

    /// Gram matrix of the trace form T(b_i, b_j) = tr(L_{b_i b_j}).
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim();
        let traces: Vec<CycElem> = (0..n)
            .map(|k| {
                let mut t = CycElem::zero(self.order);
                for m in 0..n {
                    for (idx, c) in self.product(k, m) {
                        if *idx == m {
                            t += c;
                        }
                    }
                }
                t
            })
            .collect();
        let mut g = Matrix::zeros(n, n, self.order);
        for i in 0..n {
            for j in 0..n {
                let mut s = CycElem::zero(self.order);
                for (k, c) in self.product(i, j) {
                    s += &(c * &traces[*k]);
                }
                g.set(i, j, s);
            }
        }
        g
    }

    /// Jacobson radical: the kernel of the trace form (characteristic 0).
    pub fn radical(&self) -> Vec<Vec<CycElem>> {
        self.trace_form().kernel()
    }

    fn span_basis(&self, vecs: Vec<Vec<CycElem>>) -> Vec<Vec<CycElem>> {
        if vecs.is_empty() {
            return vecs;
        }
        let (r, piv) = Matrix::from_rows(vecs, self.order).expect("rectangular").rref();
        (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
    }

    fn in_span(&self, basis: &[Vec<CycElem>], v: &[CycElem]) -> bool {
        if v.iter().all(|c| c.is_zero()) {
            return true;
        }
        let mut rows = basis.to_vec();
        let r0 = crate::linalg::span_rank(&rows, self.order);
        rows.push(v.to_vec());
        crate::linalg::span_rank(&rows, self.order) == r0
    }

    /// True when the span of `ideal` is closed under left and right multiplication.
    pub fn is_two_sided_ideal(&self, ideal: &[Vec<CycElem>]) -> bool {
        let basis = self.span_basis(ideal.to_vec());
        for v in &basis {
            for i in 0..self.dim() {
                let b = self.basis(i);
                if !self.in_span(&basis, &self.mul(&b, v)) || !self.in_span(&basis, &self.mul(v, &b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Least k with I^k = 0, if any k ≤ dim + 1 works.
    pub fn nilpotency_index(&self, ideal: &[Vec<CycElem>]) -> Option<usize> {
        let base = self.span_basis(ideal.to_vec());
        if base.is_empty() {
            return Some(1);
        }
        let mut cur = base.clone();
        for k in 2..=self.dim() + 1 {
            let mut prods = Vec::new();
            for u in &cur {
                for v in &base {
                    let p = self.mul(u, v);
                    if p.iter().any(|c| !c.is_zero()) {
                        prods.push(p);
                    }
                }
            }
            cur = self.span_basis(prods);
            if cur.is_empty() {
                return Some(k);
            }
        }
        None
    }

    /// Quotient by a two-sided ideal, on the complement of its pivot coordinates.
    /// Also returns the projection of an ambient vector.
    pub fn quotient(&self, ideal: &[Vec<CycElem>]) -> Result<FinDimAlgebra> {
        let n = self.dim();
        let (r, piv) = if ideal.is_empty() {
            (Matrix::zeros(0, n, self.order), vec![])
        } else {
            Matrix::from_rows(ideal.to_vec(), self.order)?.rref()
        };
        let keep: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
        let project = |v: &[CycElem]| -> Vec<CycElem> {
            let mut w = v.to_vec();
            for (k, &p) in piv.iter().enumerate() {
                let f = w[p].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let rj = r.get(k, j);
                    if !rj.is_zero() {
                        w[j] = &w[j] - &(&f * rj);
                    }
                }
            }
            keep.iter().map(|&j| w[j].clone()).collect()
        };
        let m = keep.len();
        let mut products = Vec::with_capacity(m * m);
        for &i in &keep {
            for &j in &keep {
                let p = project(&self.mul(&self.basis(i), &self.basis(j)));
                products.push(
                    p.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let unit = project(&self.unit);
        let gens = self
            .generators
            .iter()
            .map(|(name, v)| (name.clone(), project(v)))
            .collect();
        Ok(FinDimAlgebra::new(self.order, labels, products, unit)?.with_generators(gens))
    }

    /// Radical zero, centre one-dimensional and dimension a perfect square.
    pub fn is_central_simple(&self) -> bool {
        is_square(self.dim()) && self.radical().is_empty() && self.centre_basis().len() == 1
    }

    pub fn classify(&self) -> Result<Classification> {
        let rad = self.radical();
        let centre_dim = self.centre_basis().len();
        let kind = if rad.is_empty() && centre_dim == 1 && is_square(self.dim()) {
            FibreKind::Azumaya
        } else {
            FibreKind::Ramified
        };
        let ss = self.quotient(&rad)?;
        Ok(Classification {
            kind,
            dim: self.dim(),
            radical_dim: rad.len(),
            centre_dim,
            semisimple_dim: ss.dim(),
            semisimple_centre_dim: ss.centre_basis().len(),
            generator_images: ss.generators.clone(),
        })
    }

    /// Left regular representation matrix of `v` (columns are images of basis vectors).
    pub fn left_matrix(&self, v: &[CycElem]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n, self.order);
        for j in 0..n {
            let col = self.mul(v, &self.basis(j));
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Checks that the linear map `images` (image of each basis vector of
    /// `self` in `other`) is a unital algebra homomorphism.
    pub fn is_homomorphism(&self, other: &FinDimAlgebra, images: &[Vec<CycElem>]) -> bool {
        let n = self.dim();
        let apply = |v: &[CycElem]| -> Vec<CycElem> {
            let mut out = other.zero_vec();
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, x) in images[i].iter().enumerate() {
                    out[k] += &(c * x);
                }
            }
            out
        };
        if apply(&self.unit) != other.unit {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = apply(&self.mul(&self.basis(i), &self.basis(j)));
                let rhs = other.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers() -> FinDimAlgebra {
        // K[ε]/(ε²)
        let one = CycElem::one(1);
        let products = vec![
            vec![(0, one.clone())],
            vec![(1, one.clone())],
            vec![(1, one.clone())],
            vec![],
        ];
        FinDimAlgebra::new(1, vec!["1".into(), "ε".into()], products, vec![one, CycElem::zero(1)]).unwrap()
    }

    fn split_pair() -> FinDimAlgebra {
        // K × K with idempotents
        let one = CycElem::one(1);
        let products = vec![vec![(0, one.clone())], vec![], vec![], vec![(1, one.clone())]];
        FinDimAlgebra::new(1, vec!["p".into(), "q".into()], products, vec![one.clone(), one]).unwrap()
    }

    #[test]
    fn radicals() {
        let d = dual_numbers();
        let rad = d.radical();
        assert_eq!(rad.len(), 1);
        assert!(rad[0][0].is_zero());
        assert_eq!(d.nilpotency_index(&rad), Some(2));
        assert!(d.is_two_sided_ideal(&rad));
        assert!(split_pair().radical().is_empty());
    }

    #[test]
    fn centres_and_simplicity() {
        assert_eq!(split_pair().centre_basis().len(), 2);
        assert!(!split_pair().is_central_simple());
        let c = dual_numbers().classify().unwrap();
        assert_eq!(c.kind, FibreKind::Ramified);
        assert_eq!(c.semisimple_dim, 1);
    }

    #[test]
    fn quotient_by_radical_is_semisimple() {
        let d = dual_numbers();
        let q = d.quotient(&d.radical()).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.radical().is_empty());
        assert!(q.associativity_failures(1).is_empty());
    }

    #[test]
    fn unit_law_enforced() {
        let one = CycElem::one(1);
        let products = vec![vec![], vec![], vec![], vec![]];
        let r = FinDimAlgebra::new(1, vec!["a".into(), "b".into()], products, vec![one, CycElem::zero(1)]);
        assert!(r.is_err());
    }
}
