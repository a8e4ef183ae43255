//! Hom-Lie algebras built from σ-derivations Δ = α(id − σ) on commutative
//! algebras, the infinitesimal and Kummer–Witt families, and their
//! enveloping algebras.

use rand::Rng;
use serde::Serialize;

use crate::cyclotomic::{q_int, CycElem};
use crate::error::{Error, Result};
use crate::ncalg::{default_names, NcPoly, Params, Presentation, RewriteSystem, Word};

/// Commutative associative algebra given by structure constants on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra {
    order: u32,
    names: Vec<String>,
    /// table[i][j][k]: coefficient of y_k in y_i y_j
    table: Vec<Vec<Vec<CycElem>>>,
}

impl CommAlgebra {
    pub fn new(order: u32, names: Vec<String>, table: Vec<Vec<Vec<CycElem>>>) -> Result<Self> {
        let m = names.len();
        if table.len() != m || table.iter().any(|r| r.len() != m || r.iter().any(|v| v.len() != m)) {
            return Err(Error::DimensionMismatch("structure constant table".into()));
        }
        let a = CommAlgebra { order, names, table };
        if let Some(msg) = a.violations().into_iter().next() {
            return Err(Error::InvalidAlgebra(msg));
        }
        Ok(a)
    }

    /// R[t]/(t^n) on the basis 1, t, …, t^{n−1}.
    pub fn truncated(n: usize, order: u32) -> Self {
        Self::monogenic(n, None, order)
    }

    /// B[t]/(t^n − x) on the basis 1, t, …, t^{n−1}.
    pub fn kummer(n: usize, x: &CycElem) -> Self {
        Self::monogenic(n, Some(x), x.order())
    }

    fn monogenic(n: usize, wrap: Option<&CycElem>, order: u32) -> Self {
        let zero = CycElem::zero(order);
        let mut table = vec![vec![vec![zero; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let k = i + j;
                if k < n {
                    table[i][j][k] = CycElem::one(order);
                } else if let Some(x) = wrap {
                    table[i][j][k - n] = x.clone();
                }
            }
        }
        let names = (0..n).map(|i| format!("t^{i}")).collect();
        CommAlgebra { order, names, table }
    }

    /// Tensor product over the base field.
    pub fn tensor(&self, other: &CommAlgebra) -> Self {
        let (m, p) = (self.dim(), other.dim());
        let order = num_integer::lcm(self.order, other.order);
        let mut table = vec![vec![vec![CycElem::zero(order); m * p]; m * p]; m * p];
        for i1 in 0..m {
            for j1 in 0..p {
                for i2 in 0..m {
                    for j2 in 0..p {
                        let row = &mut table[i1 * p + j1][i2 * p + j2];
                        for k1 in 0..m {
                            let a = &self.table[i1][i2][k1];
                            if a.is_zero() {
                                continue;
                            }
                            for k2 in 0..p {
                                let b = &other.table[j1][j2][k2];
                                if !b.is_zero() {
                                    row[k1 * p + k2] = a * b;
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut names = Vec::new();
        for a in &self.names {
            for b in &other.names {
                names.push(format!("{a}⊗{b}"));
            }
        }
        CommAlgebra { order, names, table }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn product(&self, i: usize, j: usize) -> &[CycElem] {
        &self.table[i][j]
    }

    fn mul_vec(&self, u: &[CycElem], v: &[CycElem]) -> Vec<CycElem> {
        let m = self.dim();
        let mut out = vec![CycElem::zero(self.order); m];
        for i in 0..m {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for k in 0..m {
                    if !self.table[i][j][k].is_zero() {
                        out[k] += &(&c * &self.table[i][j][k]);
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<CycElem> {
        let mut v = vec![CycElem::zero(self.order); self.dim()];
        v[i] = CycElem::one(self.order);
        v
    }

    /// Commutativity and associativity failures on basis elements.
    pub fn violations(&self) -> Vec<String> {
        let m = self.dim();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if self.table[i][j] != self.table[j][i] {
                    out.push(format!("y{i} y{j} ≠ y{j} y{i}"));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                let ij = self.table[i][j].clone();
                for k in 0..m {
                    let left = self.mul_vec(&ij, &self.basis(k));
                    let right = self.mul_vec(&self.basis(i), &self.table[j][k]);
                    if left != right {
                        out.push(format!("(y{i} y{j}) y{k} ≠ y{i} (y{j} y{k})"));
                    }
                }
            }
        }
        out
    }
}

/// Diagonal automorphism σ(y_i) = λ_i y_i and the scale α of Δ = α(id − σ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData {
    pub sigma_diag: Vec<CycElem>,
    pub alpha: CycElem,
    pub q_sigma: CycElem,
}

impl TwistData {
    /// Validates that σ is multiplicative on `alg`; q_σ defaults to 1.
    pub fn new(alg: &CommAlgebra, sigma_diag: Vec<CycElem>, alpha: CycElem) -> Result<Self> {
        let m = alg.dim();
        if sigma_diag.len() != m {
            return Err(Error::DimensionMismatch("twist length".into()));
        }
        if sigma_diag.iter().any(|l| l.is_zero()) {
            return Err(Error::NotAutomorphism("σ with a zero eigenvalue".into()));
        }
        for i in 0..m {
            for j in 0..m {
                let lij = &sigma_diag[i] * &sigma_diag[j];
                for k in 0..m {
                    let c = alg.product(i, j)[k].clone();
                    if !c.is_zero() && lij != sigma_diag[k] {
                        return Err(Error::NotAutomorphism(format!(
                            "σ on y{i}·y{j} (component y{k})"
                        )));
                    }
                }
            }
        }
        let q_sigma = CycElem::one(alpha.order());
        Ok(TwistData {
            sigma_diag,
            alpha,
            q_sigma,
        })
    }
}

/// A hom-Lie algebra on a basis e_0, …, e_{m−1} with diagonal twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    family: String,
    order: u32,
    params: Params,
    /// bracket[i][j][k]: coefficient of e_k in ⟨e_i, e_j⟩
    bracket: Vec<Vec<Vec<CycElem>>>,
    twist: Vec<CycElem>,
    q_sigma: CycElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiDefect {
    pub triple: (usize, usize, usize),
    pub defect: Vec<CycElem>,
}

impl HomLieAlgebra {
    pub fn new(
        family: &str,
        order: u32,
        params: Params,
        bracket: Vec<Vec<Vec<CycElem>>>,
        twist: Vec<CycElem>,
        q_sigma: CycElem,
    ) -> Result<Self> {
        let m = twist.len();
        if bracket.len() != m || bracket.iter().any(|r| r.len() != m || r.iter().any(|v| v.len() != m)) {
            return Err(Error::DimensionMismatch("bracket table".into()));
        }
        Ok(HomLieAlgebra {
            family: family.to_string(),
            order,
            params,
            bracket,
            twist,
            q_sigma,
        })
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn dim(&self) -> usize {
        self.twist.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn twist(&self) -> &[CycElem] {
        &self.twist
    }

    pub fn q_sigma(&self) -> &CycElem {
        &self.q_sigma
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[CycElem] {
        &self.bracket[i][j]
    }

    pub fn bracket_vec(&self, u: &[CycElem], v: &[CycElem]) -> Vec<CycElem> {
        let m = self.dim();
        let mut out = vec![CycElem::zero(self.order); m];
        for i in 0..m {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for k in 0..m {
                    let b = &self.bracket[i][j][k];
                    if !b.is_zero() {
                        out[k] += &(&c * b);
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<CycElem> {
        let mut v = vec![CycElem::zero(self.order); self.dim()];
        v[i] = CycElem::one(self.order);
        v
    }

    /// Copy with σ = id and q_σ = 1.
    pub fn with_identity_twist(&self) -> Self {
        let mut h = self.clone();
        h.twist = vec![CycElem::one(self.order); self.dim()];
        h.q_sigma = CycElem::one(self.order);
        h
    }

    /// Pairs (i, j) where ⟨e_i,e_i⟩ ≠ 0 or ⟨e_i,e_j⟩ ≠ −⟨e_j,e_i⟩.
    pub fn skew_violations(&self) -> Vec<(usize, usize)> {
        let m = self.dim();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i..m {
                let bad = if i == j {
                    self.bracket[i][i].iter().any(|c| !c.is_zero())
                } else {
                    self.bracket[i][j]
                        .iter()
                        .zip(&self.bracket[j][i])
                        .any(|(a, b)| !(a + b).is_zero())
                };
                if bad {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// ↺_{a,b,c} ⟨σa, ⟨b,c⟩⟩ + q_σ ⟨a, ⟨b,c⟩⟩ on (e_i, e_j, e_k).
    pub fn hom_jacobi(&self, i: usize, j: usize, k: usize) -> Vec<CycElem> {
        let m = self.dim();
        let mut out = vec![CycElem::zero(self.order); m];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.bracket_vec(&self.basis(b), &self.basis(c));
            let mut sa = self.basis(a);
            sa[a] = self.twist[a].clone();
            let t1 = self.bracket_vec(&sa, &inner);
            let t2 = self.bracket_vec(&self.basis(a), &inner);
            for x in 0..m {
                out[x] += &(&t1[x] + &(&self.q_sigma * &t2[x]));
            }
        }
        out
    }

    /// The ordinary cyclic sum ↺⟨e_i,⟨e_j,e_k⟩⟩: half the identity-twist hom-Jacobi sum.
    pub fn jacobi_probe(&self, i: usize, j: usize, k: usize) -> Vec<CycElem> {
        let half = CycElem::from_frac(self.order, 1, 2);
        self.with_identity_twist()
            .hom_jacobi(i, j, k)
            .iter()
            .map(|c| c * &half)
            .collect()
    }

    /// Nonzero hom-Jacobi defects over all ordered basis triples.
    pub fn check_hom_jacobi(&self) -> Vec<JacobiDefect> {
        let m = self.dim();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let d = self.hom_jacobi(i, j, k);
                    if d.iter().any(|c| !c.is_zero()) {
                        out.push(JacobiDefect {
                            triple: (i, j, k),
                            defect: d,
                        });
                    }
                }
            }
        }
        out
    }

    /// Enveloping algebra: λ_i e_i e_j − λ_j e_j e_i = ⟨e_i,e_j⟩ for i < j,
    /// oriented as e_j e_i → (λ_i/λ_j) e_i e_j − λ_j⁻¹⟨e_i,e_j⟩.
    pub fn enveloping(&self) -> Result<Presentation> {
        let m = self.dim();
        let mut rules = Vec::new();
        for j in 0..m {
            for i in 0..j {
                let lj_inv = self.twist[j]
                    .inv()
                    .map_err(|_| Error::NotAutomorphism("zero twist eigenvalue".into()))?;
                let mut rhs = NcPoly::monomial(Word::from_indices(&[i, j]), &self.twist[i] * &lj_inv);
                for (k, c) in self.bracket[i][j].iter().enumerate() {
                    rhs.add_term(Word::letter(k), -(c * &lj_inv));
                }
                rules.push(((j, i), rhs));
            }
        }
        let sys = RewriteSystem::quadratic(default_names(m), rules)?;
        Ok(Presentation::new(&self.family, self.order, self.params.clone(), sys))
    }
}

/// ⟨yΔ, y'Δ⟩ = (σ(y)Δ(y') − σ(y')Δ(y))Δ on the basis y_iΔ.
pub fn twisted_bracket(alg: &CommAlgebra, twist: &TwistData) -> HomLieAlgebra {
    let m = alg.dim();
    let order = num_integer::lcm(alg.order(), twist.alpha.order());
    let mut bracket = vec![vec![vec![CycElem::zero(order); m]; m]; m];
    let one = CycElem::one(order);
    for i in 0..m {
        for j in 0..m {
            let (li, lj) = (&twist.sigma_diag[i], &twist.sigma_diag[j]);
            // σ(y_i)Δ(y_j) − σ(y_j)Δ(y_i) = α(λ_i(1−λ_j) − λ_j(1−λ_i)) y_i y_j
            let c = &twist.alpha * &(&(li * &(&one - lj)) - &(lj * &(&one - li)));
            for k in 0..m {
                bracket[i][j][k] = &c * &alg.product(i, j)[k];
            }
        }
    }
    HomLieAlgebra {
        family: "twisted".into(),
        order,
        params: Params::default(),
        bracket,
        twist: twist.sigma_diag.clone(),
        q_sigma: twist.q_sigma.clone(),
    }
}

/// ⟨e_i,e_j⟩ = a(q^i[j]_q − q^j[i]_q) e_{i+j} (zero when i+j ≥ n), λ_i = q^i.
pub fn infinitesimal_homlie(n: usize, q: &CycElem, a: &CycElem) -> Result<HomLieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter("infinitesimal family needs n ≥ 2".into()));
    }
    if q.is_zero() {
        return Err(Error::InvalidParameter("q must be nonzero".into()));
    }
    let order = num_integer::lcm(q.order(), a.order());
    let mut bracket = vec![vec![vec![CycElem::zero(order); n]; n]; n];
    let pows: Vec<CycElem> = (0..n).map(|i| q.powu(i as u64)).collect();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                let c = &(&pows[i] * &q_int(j as u32, q)) - &(&pows[j] * &q_int(i as u32, q));
                bracket[i][j][i + j] = a * &c;
            }
        }
    }
    Ok(HomLieAlgebra {
        family: "infinitesimal".into(),
        order,
        params: Params {
            q: Some(q.clone()),
            a: Some(a.clone()),
            ..Params::default()
        },
        bracket,
        twist: pows,
        q_sigma: CycElem::one(order),
    })
}

/// ⟨e_i,e_j⟩ = ζ^{ri}(1 − ζ^{r(j−i)}) x^{[i+j ≥ n]} e_{(i+j) mod n}, λ_i = ζ^{ri}.
pub fn kummer_witt_homlie(n: usize, r: i64, x: &CycElem) -> Result<HomLieAlgebra> {
    if n < 1 || r < 0 || r >= n as i64 {
        return Err(Error::InvalidParameter(format!("need 0 ≤ r < n, got r={r}, n={n}")));
    }
    let order = num_integer::lcm(n as u32, x.order());
    let z = |k: i64| CycElem::zeta(n as u32, k);
    let one = CycElem::one(order);
    let mut bracket = vec![vec![vec![CycElem::zero(order); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (ii, jj) = (i as i64, j as i64);
            let mut c = &z(r * ii) * &(&one - &z(r * (jj - ii)));
            if i + j >= n {
                c = &c * x;
            }
            bracket[i][j][(i + j) % n] = c;
        }
    }
    let twist = (0..n).map(|i| z(r * i as i64)).collect();
    Ok(HomLieAlgebra {
        family: "kummerwitt".into(),
        order,
        params: Params {
            n: Some(n),
            r: Some(r),
            x: Some(x.clone()),
            ..Params::default()
        },
        bracket,
        twist,
        q_sigma: one,
    })
}

/// A random commutative algebra (tensor product of one or two monogenic
/// factors, total dimension ≤ 6) with a random diagonal automorphism.
pub fn random_twisted_algebra<R: Rng>(rng: &mut R, order: u32) -> (CommAlgebra, TwistData) {
    let factor = |rng: &mut R, max: usize| -> (CommAlgebra, Vec<CycElem>) {
        let m = rng.gen_range(1..=max);
        let kummer = rng.gen_bool(0.5);
        let mu = if kummer {
            // σ must fix t^m = x, so μ^m = 1
            let k = rng.gen_range(0..m as i64);
            CycElem::zeta(m as u32, k)
        } else {
            let mut c = CycElem::random(order, rng, 3);
            while c.is_zero() {
                c = CycElem::random(order, rng, 3);
            }
            c
        };
        let alg = if kummer {
            let mut x = CycElem::random(order, rng, 4);
            while x.is_zero() {
                x = CycElem::random(order, rng, 4);
            }
            CommAlgebra::kummer(m, &x)
        } else {
            CommAlgebra::truncated(m, order)
        };
        let eig = (0..m).map(|i| mu.powu(i as u64)).collect();
        (alg, eig)
    };
    let (a, ea) = factor(rng, 6);
    let (alg, eig) = if a.dim() <= 3 && rng.gen_bool(0.5) {
        let (b, eb) = factor(rng, 6 / a.dim());
        let mut eig = Vec::new();
        for x in &ea {
            for y in &eb {
                eig.push(x * y);
            }
        }
        (a.tensor(&b), eig)
    } else {
        (a, ea)
    };
    let mut alpha = CycElem::random(order, rng, 5);
    if alpha.is_zero() {
        alpha = CycElem::one(order);
    }
    let twist = TwistData::new(&alg, eig, alpha).expect("diagonal monomial twist is multiplicative");
    (alg, twist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(order: u32, m: usize, k: usize, c: CycElem) -> Vec<CycElem> {
        let mut v = vec![CycElem::zero(order); m];
        v[k] = c;
        v
    }

    #[test]
    fn infinitesimal_small_cases() {
        let q = CycElem::from_int(1, 5);
        let a = CycElem::from_int(1, 3);
        let h2 = infinitesimal_homlie(2, &q, &a).unwrap();
        assert_eq!(h2.bracket(0, 1), &unit(1, 2, 1, a.clone())[..]);
        let h3 = infinitesimal_homlie(3, &q, &a).unwrap();
        assert_eq!(h3.bracket(0, 2), &unit(1, 3, 2, &a * &q_int(2, &q))[..]);
        assert!(h3.bracket(1, 2).iter().all(|c| c.is_zero()));
        let h4 = infinitesimal_homlie(4, &q, &a).unwrap();
        assert_eq!(h4.bracket(1, 2), &unit(1, 4, 3, &a * &q)[..]);
    }

    #[test]
    fn truncated_line_reproduces_infinitesimal() {
        let q = CycElem::zeta(5, 2);
        let a = CycElem::from_frac(5, 2, 3);
        for n in 2..=6 {
            let alg = CommAlgebra::truncated(n, 5);
            let eig = (0..n).map(|i| q.powu(i as u64)).collect();
            let alpha = &a * &(&CycElem::one(5) - &q).inv().unwrap();
            let tw = TwistData::new(&alg, eig, alpha).unwrap();
            let h = twisted_bracket(&alg, &tw);
            let g = infinitesimal_homlie(n, &q, &a).unwrap();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(h.bracket(i, j), g.bracket(i, j), "n={n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn kummer_extension_reproduces_kummer_witt() {
        let x = CycElem::from_int(1, 2);
        for n in 2..=6usize {
            for r in 0..n as i64 {
                let alg = CommAlgebra::kummer(n, &x.embed(n as u32).unwrap());
                let eig = (0..n).map(|i| CycElem::zeta(n as u32, r * i as i64)).collect();
                let tw = TwistData::new(&alg, eig, CycElem::one(n as u32)).unwrap();
                let h = twisted_bracket(&alg, &tw);
                let g = kummer_witt_homlie(n, r, &x).unwrap();
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(h.bracket(i, j), g.bracket(i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn kummer_witt_values() {
        let x = CycElem::from_int(3, 7);
        let h = kummer_witt_homlie(3, 1, &x).unwrap();
        let z = CycElem::zeta(3, 1);
        let one = CycElem::one(3);
        assert_eq!(h.bracket(0, 1), &unit(3, 3, 1, &one - &z)[..]);
        assert_eq!(h.bracket(1, 2), &unit(3, 3, 0, &(&z * &(&one - &z)) * &x)[..]);
        let abelian = kummer_witt_homlie(4, 0, &x).unwrap();
        assert!(abelian.bracket.iter().flatten().flatten().all(|c| c.is_zero()));
        assert!(h.check_hom_jacobi().is_empty());
        assert!(h.skew_violations().is_empty());
    }

    #[test]
    fn twist_must_be_multiplicative() {
        let alg = CommAlgebra::truncated(3, 1);
        let eig = vec![CycElem::one(1), CycElem::from_int(1, 2), CycElem::from_int(1, 3)];
        assert!(matches!(
            TwistData::new(&alg, eig, CycElem::one(1)),
            Err(Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn plain_jacobi_probe() {
        let q = CycElem::from_int(1, 3);
        let a = CycElem::from_int(1, 2);
        let h3 = infinitesimal_homlie(3, &q, &a).unwrap();
        assert!(h3.with_identity_twist().check_hom_jacobi().is_empty());
        let h4 = infinitesimal_homlie(4, &q, &a).unwrap();
        // a²q(q²−1) = 4·3·8
        assert_eq!(h4.jacobi_probe(0, 1, 2), unit(1, 4, 3, CycElem::from_int(1, 96)));
    }

    #[test]
    fn enveloping_of_infinitesimal_n2_is_affine_quantum_plane() {
        let q = CycElem::zeta(5, 1);
        let a = CycElem::from_int(5, 1);
        let p = infinitesimal_homlie(2, &q, &a).unwrap().enveloping().unwrap();
        // e0 e1 − q e1 e0 = a e1  ⇒  e1 e0 → q⁻¹ e0 e1 − q⁻¹ a e1
        let rule = p.system().rule_for(&[1, 0]).unwrap();
        let qi = q.inv().unwrap();
        let expect = NcPoly::monomial(Word::from_indices(&[0, 1]), qi.clone())
            .add(&NcPoly::monomial(Word::letter(1), -(&qi * &a)));
        assert_eq!(rule.rhs, expect);
        assert!(p.is_confluent());
    }
}
