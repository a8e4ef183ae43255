//! Dense matrices over ℚ(ζ_n) and exact row reduction.

use std::fmt;

use serde::Serialize;

use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    order: u32,
    data: Vec<CycElem>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, order: u32) -> Self {
        Matrix {
            rows,
            cols,
            order,
            data: vec![CycElem::zero(order); rows * cols],
        }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        let mut m = Self::zeros(n, n, order);
        for i in 0..n {
            m.data[i * n + i] = CycElem::one(order);
        }
        m
    }

    pub fn scalar(n: usize, c: &CycElem) -> Self {
        let mut m = Self::zeros(n, n, c.order());
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycElem>>, order: u32) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let mut m = Self::zeros(r, c, order);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &CycElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycElem) {
        if x.order() != self.order {
            self.order = num_integer::lcm(self.order, x.order());
        }
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[CycElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<CycElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let order = num_integer::lcm(self.order, other.order);
        let mut out = Matrix::zeros(self.rows, other.cols, order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&CycElem, &CycElem) -> CycElem) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("shape".into()));
        }
        let data: Vec<CycElem> = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            order: num_integer::lcm(self.order, other.order),
            data,
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &CycElem) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            order: num_integer::lcm(self.order, c.order()),
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.order);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> CycElem {
        let mut t = CycElem::zero(self.order);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn pow(&self, e: u32) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.rows, self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Flattens row-major into a single vector.
    pub fn to_vec(&self) -> Vec<CycElem> {
        self.data.clone()
    }

    /// Reduced row echelon form and pivot columns.
    ///
    /// Forward elimination is fraction-free (Bareiss style) with the first
    /// nonzero entry of each column as pivot; pivots are normalised at the end.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prev = CycElem::one(self.order);
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let piv = m.get(r, c).clone();
            let prev_inv = prev.inv().expect("previous pivot is nonzero");
            for i in r + 1..m.rows {
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = &(&piv * m.get(i, j)) - &(&f * m.get(r, j));
                    let v = if prev.is_one() { v } else { &v * &prev_inv };
                    m.data[i * m.cols + j] = v;
                }
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        // back substitution to reduced form
        for (k, &c) in pivots.iter().enumerate().rev() {
            let inv = m.get(k, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(k, j) * &inv;
                m.data[k * m.cols + j] = v;
            }
            for i in 0..k {
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(k, j));
                    m.data[i * m.cols + j] = v;
                }
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space {v : M v = 0}.
    pub fn kernel(&self) -> Vec<Vec<CycElem>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycElem::zero(self.order); self.cols];
                v[f] = CycElem::one(self.order);
                for (k, &c) in pivots.iter().enumerate() {
                    v[c] = -m.get(k, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, self.order);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, CycElem::one(self.order));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut out = Matrix::zeros(n, n, self.order);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }
}

/// Rank of a family of vectors.
pub fn span_rank(vectors: &[Vec<CycElem>], order: u32) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec(), order)
        .expect("equal length vectors")
        .rank()
}

/// Row-echelon basis grown one vector at a time.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    /// (pivot column, row with a 1 at the pivot)
    rows: Vec<(usize, Vec<CycElem>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[CycElem]) -> Vec<CycElem> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[CycElem]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[CycElem]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        let w: Vec<CycElem> = w.iter().map(|x| x * &inv).collect();
        // keep earlier rows reduced at the new pivot so reduction order does not matter
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    /// Order in which every entry can be written, lcm of the entry orders.
    pub fn literal_order(&self) -> u32 {
        self.data.iter().fold(self.order, |o, x| num_integer::lcm(o, x.order()))
    }

    /// Rows of canonical literals in ℚ(ζ_m), m = [`Matrix::literal_order`].
    pub fn to_literals(&self) -> Vec<Vec<String>> {
        let m = self.literal_order();
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.embed(m).expect("lcm order").to_string())
                    .collect()
            })
            .collect()
    }

    pub fn from_literals(rows: &[Vec<String>], order: u32) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| CycElem::parse(s, order)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(parsed, order)
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Matrix", 2)?;
        st.serialize_field("order", &self.literal_order())?;
        st.serialize_field("rows", &self.to_literals())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| CycElem::from_int(1, x)).collect())
                .collect(),
            1,
        )
        .unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        let v = Matrix::from_rows(k[0].iter().map(|x| vec![x.clone()]).collect(), 1).unwrap();
        assert!(a.mul(&v).unwrap().is_zero());
    }

    #[test]
    fn inverse_over_cyclotomic() {
        let z = CycElem::zeta(5, 1);
        let a = Matrix::from_rows(
            vec![
                vec![z.clone(), CycElem::one(5)],
                vec![CycElem::from_int(5, 2), &z * &z],
            ],
            5,
        )
        .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2, 5));
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_err());
    }
}
