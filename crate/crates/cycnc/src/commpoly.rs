//! Commutative polynomials over ℚ(ζ_n), used for central images.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cyclotomic::CycElem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommPoly {
    names: Vec<String>,
    terms: BTreeMap<Vec<u32>, CycElem>,
}

impl CommPoly {
    pub fn zero(names: Vec<String>) -> Self {
        CommPoly {
            names,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn add_term(&mut self, exps: &[u32], c: CycElem) {
        assert_eq!(exps.len(), self.nvars());
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.to_vec()).or_insert_with(|| CycElem::zero(c.order()));
        *e += &c;
        if e.is_zero() {
            self.terms.remove(exps);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&CycElem> {
        self.terms.get(exps)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CycElem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn constant(names: Vec<String>, c: CycElem) -> Self {
        let mut p = Self::zero(names);
        let z = vec![0; p.nvars()];
        p.add_term(&z, c);
        p
    }

    /// The variable with index i.
    pub fn var(names: Vec<String>, i: usize) -> Self {
        let mut p = Self::zero(names);
        let mut e = vec![0; p.nvars()];
        e[i] = 1;
        p.add_term(&e, CycElem::one(1));
        p
    }

    pub fn add(&self, other: &CommPoly) -> CommPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &CycElem) -> CommPoly {
        let mut out = Self::zero(self.names.clone());
        for (e, d) in &self.terms {
            out.add_term(e, d * c);
        }
        out
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut out = Self::zero(self.names.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(&e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[CycElem]) -> CycElem {
        let order = point.iter().fold(1, |o, p| num_integer::lcm(o, p.order()));
        let mut acc = CycElem::zero(order);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (p, &k) in point.iter().zip(e) {
                t = &t * &p.powu(k as u64);
            }
            acc += &t;
        }
        acc
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then(b.0.cmp(a.0))
        });
        let parts: Vec<String> = items
            .into_iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .zip(&self.names)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono.join("*"),
                    (false, false) => format!("({c})*{}", mono.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for CommPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancel_and_eval() {
        let mut p = CommPoly::zero(vec!["u".into(), "v".into()]);
        p.add_term(&[1, 1], CycElem::from_int(1, 2));
        p.add_term(&[0, 0], CycElem::from_int(1, -1));
        p.add_term(&[0, 0], CycElem::from_int(1, 1));
        assert_eq!(p.to_string(), "(2)*u*v");
        let v = p.eval(&[CycElem::from_int(1, 3), CycElem::from_int(1, 5)]);
        assert_eq!(v, CycElem::from_int(1, 30));
        let names = vec!["a".to_string(), "b".to_string()];
        let a = CommPoly::var(names.clone(), 0);
        let one = CommPoly::constant(names.clone(), CycElem::one(1));
        let sq = a.add(&one).mul(&a.add(&one.scale(&CycElem::from_int(1, -1))));
        assert_eq!(sq.to_string(), "a^2 + (-1)");
    }
}
