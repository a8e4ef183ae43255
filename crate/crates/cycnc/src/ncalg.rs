//! Noncommutative polynomials, rewriting to normal form, and presentations.
//!
//! Words are ordered degree-lexicographically with e₀ < e₁ < ⋯. A rewrite
//! system is a set of rules `lhs → rhs` in which every word of `rhs` is
//! strictly smaller than `lhs`; normal forms are computed by repeatedly
//! rewriting the largest reducible word.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A word in the generators, compared by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn from_indices(ix: &[usize]) -> Self {
        Word(ix.iter().map(|&i| i as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&i| names.get(i as usize).cloned().unwrap_or_else(|| format!("e{i}")))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite linear combination of words with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, CycElem>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn constant(c: CycElem) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: CycElem) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    /// The generator e_i with coefficient 1 in ℚ(ζ_order).
    pub fn generator(i: usize, order: u32) -> Self {
        Self::monomial(Word::letter(i), CycElem::one(order))
    }

    pub fn word(ix: &[usize], order: u32) -> Self {
        Self::monomial(Word::from_indices(ix), CycElem::one(order))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, CycElem)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: CycElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &CycElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&CycElem> {
        self.terms.get(w)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|w| w.len())
    }

    pub fn leading(&self) -> Option<(&Word, &CycElem)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), -c);
        }
        p
    }

    pub fn scale(&self, c: &CycElem) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), -x)))
    }

    /// Product in the free algebra (no rewriting).
    pub fn concat_mul(&self, other: &NcPoly) -> NcPoly {
        let mut p = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                p.add_term(u.concat(v), a * b);
            }
        }
        p
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in self.terms.iter().rev() {
            let lit = c.to_string();
            let s = if w.is_empty() {
                format!("({lit})")
            } else if c.is_one() {
                w.display(names)
            } else {
                format!("({lit})*{}", w.display(names))
            };
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(&[]))
    }
}

/// A single rewrite rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

/// An overlap whose two reductions disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub word: Vec<usize>,
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiamondReport {
    pub overlaps_checked: usize,
    pub unresolved: Vec<Overlap>,
}

impl DiamondReport {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// Rewrite rules over a fixed generating set.
///
/// Left-hand sides are either descending pairs e_j e_i (j > i) or pure
/// powers e_i^k (k ≥ 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    names: Vec<String>,
    rules: Vec<Rule>,
    index: HashMap<Vec<u8>, usize>,
    lhs_lens: Vec<usize>,
}

impl RewriteSystem {
    pub fn new(names: Vec<String>, rules: Vec<Rule>) -> Result<Self> {
        let ngens = names.len();
        let mut index = HashMap::new();
        for (k, r) in rules.iter().enumerate() {
            let lhs_str = r.lhs.display(&names);
            for &g in &r.lhs.0 {
                if g as usize >= ngens {
                    return Err(Error::GeneratorOutOfRange(g as usize));
                }
            }
            let l = &r.lhs.0;
            let descending_pair = l.len() == 2 && l[0] > l[1];
            let pure_power = l.len() >= 2 && l.iter().all(|&g| g == l[0]);
            if !(descending_pair || pure_power) {
                return Err(Error::NonOrientable {
                    lhs: lhs_str,
                    msg: "left side must be a descending pair or a pure power".into(),
                });
            }
            for (w, _) in r.rhs.terms() {
                if w.0.iter().any(|&g| g as usize >= ngens) {
                    return Err(Error::GeneratorOutOfRange(ngens));
                }
                if *w >= r.lhs {
                    return Err(Error::NonOrientable {
                        lhs: lhs_str,
                        msg: format!("right side contains {} which is not smaller", w.display(&names)),
                    });
                }
            }
            if index.insert(r.lhs.0.clone(), k).is_some() {
                return Err(Error::DuplicateRule(lhs_str));
            }
        }
        let mut lhs_lens: Vec<usize> = rules.iter().map(|r| r.lhs.len()).collect();
        lhs_lens.sort_unstable();
        lhs_lens.dedup();
        Ok(RewriteSystem {
            names,
            rules,
            index,
            lhs_lens,
        })
    }

    /// Quadratic system from rules `e_j e_i → rhs` given as `((j, i), rhs)`.
    pub fn quadratic(names: Vec<String>, rules: Vec<((usize, usize), NcPoly)>) -> Result<Self> {
        let rules = rules
            .into_iter()
            .map(|((j, i), rhs)| Rule {
                lhs: Word::from_indices(&[j, i]),
                rhs,
            })
            .collect();
        Self::new(names, rules)
    }

    /// Adds rules e_i^k → c.
    pub fn with_power_rules(&self, powers: &[(usize, usize, CycElem)]) -> Result<Self> {
        let mut rules = self.rules.clone();
        for (i, k, c) in powers {
            rules.push(Rule {
                lhs: Word::from_indices(&vec![*i; *k]),
                rhs: NcPoly::constant(c.clone()),
            });
        }
        Self::new(self.names.clone(), rules)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule_for(&self, lhs: &[usize]) -> Option<&Rule> {
        let key: Vec<u8> = lhs.iter().map(|&i| i as u8).collect();
        self.index.get(&key).map(|&k| &self.rules[k])
    }

    /// Leftmost redex as (position, rule index).
    fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for &l in &self.lhs_lens {
                if pos + l <= w.len() {
                    if let Some(&k) = self.index.get(&w[pos..pos + l]) {
                        return Some((pos, k));
                    }
                }
            }
        }
        None
    }

    fn all_redexes(&self, w: &[u8]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for &l in &self.lhs_lens {
                if pos + l <= w.len() {
                    if let Some(&k) = self.index.get(&w[pos..pos + l]) {
                        out.push((pos, k));
                    }
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(&w.0).is_none()
    }

    fn rewrite_at(&self, w: &Word, c: &CycElem, pos: usize, k: usize) -> Vec<(Word, CycElem)> {
        let rule = &self.rules[k];
        let (pre, post) = (&w.0[..pos], &w.0[pos + rule.lhs.len()..]);
        rule.rhs
            .terms()
            .map(|(rw, rc)| {
                let mut v = Vec::with_capacity(pre.len() + rw.len() + post.len());
                v.extend_from_slice(pre);
                v.extend_from_slice(&rw.0);
                v.extend_from_slice(post);
                (Word(v), c * rc)
            })
            .collect()
    }

    /// Normal form: a linear combination of irreducible words.
    pub fn nf(&self, p: &NcPoly) -> NcPoly {
        let mut work = p.terms.clone();
        let mut out = NcPoly::zero();
        while let Some((w, c)) = work.pop_last() {
            match self.find_redex(&w.0) {
                None => {
                    out.terms.insert(w, c);
                }
                Some((pos, k)) => {
                    for (nw, nc) in self.rewrite_at(&w, &c, pos, k) {
                        add_into(&mut work, nw, nc);
                    }
                }
            }
        }
        out
    }

    /// Normal form computed with a random choice of term and redex at each step.
    pub fn nf_random<R: Rng>(&self, p: &NcPoly, rng: &mut R) -> NcPoly {
        let mut cur = p.clone();
        loop {
            let reducible: Vec<Word> = cur
                .terms
                .keys()
                .filter(|w| !self.is_irreducible(w))
                .cloned()
                .collect();
            let Some(w) = reducible.choose(rng) else {
                return cur;
            };
            let c = cur.terms.remove(w).expect("term present");
            let redexes = self.all_redexes(&w.0);
            let &(pos, k) = redexes.choose(rng).expect("reducible word");
            for (nw, nc) in self.rewrite_at(w, &c, pos, k) {
                cur.add_term(nw, nc);
            }
        }
    }

    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        self.nf(&a.concat_mul(b))
    }

    pub fn pow(&self, a: &NcPoly, e: u32, order: u32) -> NcPoly {
        let mut acc = NcPoly::constant(CycElem::one(order));
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Checks every overlap and inclusion ambiguity between rule left sides.
    pub fn diamond_check(&self) -> DiamondReport {
        let mut checked = 0;
        let mut unresolved = Vec::new();
        for a in &self.rules {
            for b in &self.rules {
                let (la, lb) = (&a.lhs.0, &b.lhs.0);
                // proper overlaps: suffix of a = prefix of b
                for k in 1..la.len().min(lb.len()) {
                    if la[la.len() - k..] != lb[..k] {
                        continue;
                    }
                    checked += 1;
                    let tail = Word(lb[k..].to_vec());
                    let head = Word(la[..la.len() - k].to_vec());
                    let one = a.rhs.concat_mul(&NcPoly::monomial(tail.clone(), CycElem::one(1)));
                    let two = NcPoly::monomial(head.clone(), CycElem::one(1)).concat_mul(&b.rhs);
                    let diff = self.nf(&one).sub(&self.nf(&two));
                    if !diff.is_zero() {
                        unresolved.push(Overlap {
                            word: head.concat(&b.lhs).indices(),
                            difference: diff.display(&self.names),
                        });
                    }
                }
                // inclusions: b strictly inside a
                if lb.len() < la.len() {
                    for pos in 0..=la.len() - lb.len() {
                        if la[pos..pos + lb.len()] != lb[..] {
                            continue;
                        }
                        checked += 1;
                        let pre = NcPoly::monomial(Word(la[..pos].to_vec()), CycElem::one(1));
                        let post = NcPoly::monomial(Word(la[pos + lb.len()..].to_vec()), CycElem::one(1));
                        let two = pre.concat_mul(&b.rhs).concat_mul(&post);
                        let diff = self.nf(&a.rhs).sub(&self.nf(&two));
                        if !diff.is_zero() {
                            unresolved.push(Overlap {
                                word: a.lhs.indices(),
                                difference: diff.display(&self.names),
                            });
                        }
                    }
                }
            }
        }
        DiamondReport {
            overlaps_checked: checked,
            unresolved,
        }
    }

    /// Irreducible words of each degree up to `max_degree`.
    pub fn irreducible_words(&self, max_degree: usize) -> Vec<Vec<Word>> {
        let mut levels = vec![vec![Word::empty()]];
        for d in 1..=max_degree {
            let mut next = Vec::new();
            for w in &levels[d - 1] {
                for g in 0..self.ngens() {
                    let mut v = w.0.clone();
                    v.push(g as u8);
                    // only redexes ending at the new letter can be new
                    let fresh = self.lhs_lens.iter().all(|&l| {
                        l > v.len() || !self.index.contains_key(&v[v.len() - l..])
                    });
                    if fresh {
                        next.push(Word(v));
                    }
                }
            }
            levels.push(next);
        }
        levels
    }

    /// Image of `p` under the algebra map sending e_i to `images[i]`, reduced here.
    pub fn substitute(&self, p: &NcPoly, images: &[NcPoly]) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        let mut cache: HashMap<Vec<u8>, NcPoly> = HashMap::new();
        for (w, c) in p.terms() {
            let mut acc = NcPoly::constant(CycElem::one(c.order()));
            for k in 0..w.len() {
                let prefix = &w.0[..=k];
                if let Some(hit) = cache.get(prefix) {
                    acc = hit.clone();
                    continue;
                }
                let img = images
                    .get(w.0[k] as usize)
                    .ok_or(Error::GeneratorOutOfRange(w.0[k] as usize))?;
                acc = self.mul(&acc, img);
                cache.insert(prefix.to_vec(), acc.clone());
            }
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }

    /// Generators g (by index) with nf(p g − g p) ≠ 0.
    pub fn non_commuting_generators(&self, p: &NcPoly, order: u32) -> Vec<usize> {
        (0..self.ngens())
            .filter(|&g| {
                let e = NcPoly::generator(g, order);
                !self.mul(p, &e).sub(&self.mul(&e, p)).is_zero()
            })
            .collect()
    }

    pub fn is_central(&self, p: &NcPoly, order: u32) -> bool {
        self.non_commuting_generators(p, order).is_empty()
    }
}

fn add_into(map: &mut BTreeMap<Word, CycElem>, w: Word, c: CycElem) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(x) => {
            *x += &c;
            if x.is_zero() {
                map.remove(&w);
            }
        }
        None => {
            map.insert(w, c);
        }
    }
}

/// Evaluates `p` at matrices assigned to the generators.
pub fn eval_rep(p: &NcPoly, gens: &[Matrix]) -> Result<Matrix> {
    let dim = gens
        .first()
        .map(|m| m.rows())
        .ok_or_else(|| Error::DimensionMismatch("no generator matrices".into()))?;
    let order = gens.iter().fold(1, |o, m| num_integer::lcm(o, m.order()));
    let mut acc = Matrix::zeros(dim, dim, order);
    for (w, c) in p.terms() {
        let mut m = Matrix::scalar(dim, c);
        for &g in &w.0 {
            let g = gens.get(g as usize).ok_or(Error::GeneratorOutOfRange(g as usize))?;
            m = m.mul(g)?;
        }
        acc = acc.add(&m)?;
    }
    Ok(acc)
}

/// A random polynomial with up to `terms` monomials of degree ≤ `max_degree`
/// and small coefficients in ℚ(ζ_order).
pub fn random_poly<R: Rng>(rng: &mut R, ngens: usize, max_degree: usize, terms: usize, order: u32) -> NcPoly {
    let mut p = NcPoly::zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_degree);
        let ix: Vec<usize> = (0..len).map(|_| rng.gen_range(0..ngens)).collect();
        p.add_term(Word::from_indices(&ix), CycElem::random(order, rng, 3));
    }
    p
}

/// Named parameters of a presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    /// root-of-unity order ζ = ζ_n of the family
    pub n: Option<usize>,
    pub r: Option<i64>,
    pub x: Option<CycElem>,
    pub q: Option<CycElem>,
    pub a: Option<CycElem>,
}

/// A rewrite system together with family metadata.
#[derive(Debug)]
pub struct Presentation {
    family: Option<String>,
    order: u32,
    params: Params,
    system: RewriteSystem,
    diamond: OnceLock<DiamondReport>,
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            family: self.family.clone(),
            order: self.order,
            params: self.params.clone(),
            system: self.system.clone(),
            diamond: self.diamond.clone(),
        }
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.order == other.order
            && self.params == other.params
            && self.system == other.system
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RuleJson {
    lhs: Vec<usize>,
    rhs: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Default)]
struct ParamsJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    a: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    family: Option<String>,
    order: u32,
    generators: Vec<String>,
    #[serde(default)]
    params: ParamsJson,
    rules: Vec<RuleJson>,
}

impl Presentation {
    pub fn new(family: &str, order: u32, params: Params, system: RewriteSystem) -> Self {
        Presentation {
            family: Some(family.to_string()),
            order,
            params,
            system,
            diamond: OnceLock::new(),
        }
    }

    pub fn family(&self) -> &str {
        self.family.as_deref().unwrap_or("custom")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn names(&self) -> &[String] {
        self.system.names()
    }

    pub fn ngens(&self) -> usize {
        self.system.ngens()
    }

    pub fn gen(&self, i: usize) -> NcPoly {
        NcPoly::generator(i, self.order)
    }

    pub fn word(&self, ix: &[usize]) -> NcPoly {
        NcPoly::word(ix, self.order)
    }

    pub fn scalar(&self, c: CycElem) -> NcPoly {
        NcPoly::constant(c)
    }

    pub fn one(&self) -> NcPoly {
        NcPoly::constant(CycElem::one(self.order))
    }

    pub fn zeta(&self, k: i64) -> CycElem {
        CycElem::zeta(self.order, k)
    }

    /// Diamond-lemma report, computed once.
    pub fn diamond(&self) -> &DiamondReport {
        self.diamond.get_or_init(|| self.system.diamond_check())
    }

    pub fn is_confluent(&self) -> bool {
        self.diamond().is_confluent()
    }

    pub fn nf(&self, p: &NcPoly) -> NcPoly {
        self.system.nf(p)
    }

    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        self.system.mul(a, b)
    }

    pub fn pow(&self, a: &NcPoly, e: u32) -> NcPoly {
        self.system.pow(a, e, self.order)
    }

    pub fn is_central(&self, p: &NcPoly) -> bool {
        self.system.is_central(p, self.order)
    }

    /// The defining relations lhs − rhs.
    pub fn relations(&self) -> Vec<NcPoly> {
        self.system
            .rules()
            .iter()
            .map(|r| NcPoly::monomial(r.lhs.clone(), CycElem::one(self.order)).sub(&r.rhs))
            .collect()
    }

    /// Number of irreducible words in each degree 0..=max_degree.
    pub fn hilbert_series(&self, max_degree: usize) -> Vec<usize> {
        self.system
            .irreducible_words(max_degree)
            .iter()
            .map(|l| l.len())
            .collect()
    }

    pub fn with_power_rules(&self, family: &str, powers: &[(usize, usize, CycElem)]) -> Result<Self> {
        Ok(Presentation::new(
            family,
            self.order,
            self.params.clone(),
            self.system.with_power_rules(powers)?,
        ))
    }

    pub fn to_json(&self) -> String {
        let p = &self.params;
        // literals are read back in ℚ(ζ_order)
        let lit = |c: &CycElem| c.embed(self.order).unwrap_or_else(|_| c.clone()).to_string();
        let doc = PresentationJson {
            family: self.family.clone(),
            order: self.order,
            generators: self.system.names().to_vec(),
            params: ParamsJson {
                n: p.n,
                r: p.r,
                x: p.x.as_ref().map(lit),
                q: p.q.as_ref().map(lit),
                a: p.a.as_ref().map(lit),
            },
            rules: self
                .system
                .rules()
                .iter()
                .map(|r| RuleJson {
                    lhs: r.lhs.indices(),
                    rhs: r
                        .rhs
                        .terms()
                        .rev()
                        .map(|(w, c)| TermJson {
                            word: w.indices(),
                            coeff: lit(c),
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: PresentationJson = serde_json::from_str(s)?;
        let order = doc.order;
        if order == 0 {
            return Err(Error::InvalidParameter("order must be positive".into()));
        }
        let lit = |x: &Option<String>| -> Result<Option<CycElem>> {
            x.as_ref().map(|s| CycElem::parse(s, order)).transpose()
        };
        let params = Params {
            n: doc.params.n,
            r: doc.params.r,
            x: lit(&doc.params.x)?,
            q: lit(&doc.params.q)?,
            a: lit(&doc.params.a)?,
        };
        let mut rules = Vec::new();
        for r in doc.rules {
            let mut rhs = NcPoly::zero();
            for t in r.rhs {
                rhs.add_term(Word::from_indices(&t.word), CycElem::parse(&t.coeff, order)?);
            }
            rules.push(Rule {
                lhs: Word::from_indices(&r.lhs),
                rhs,
            });
        }
        let system = RewriteSystem::new(doc.generators, rules)?;
        Ok(Presentation {
            family: doc.family,
            order,
            params,
            system,
            diamond: OnceLock::new(),
        })
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn quantum_plane(order: u32) -> RewriteSystem {
        let z = CycElem::zeta(order, -1);
        RewriteSystem::quadratic(
            default_names(2),
            vec![((1, 0), NcPoly::monomial(Word::from_indices(&[0, 1]), z))],
        )
        .unwrap()
    }

    #[test]
    fn deglex_order() {
        let a = Word::from_indices(&[1]);
        let b = Word::from_indices(&[0, 0]);
        let c = Word::from_indices(&[0, 1]);
        assert!(a < b && b < c);
    }

    #[test]
    fn quantum_plane_normal_form() {
        let s = quantum_plane(5);
        let p = NcPoly::word(&[1, 0], 5);
        let expect = NcPoly::monomial(Word::from_indices(&[0, 1]), CycElem::zeta(5, -1));
        assert_eq!(s.nf(&p), expect);
        let q = NcPoly::word(&[1, 1, 0], 5);
        assert_eq!(
            s.nf(&q),
            NcPoly::monomial(Word::from_indices(&[0, 1, 1]), CycElem::zeta(5, -2))
        );
        assert!(s.diamond_check().is_confluent());
    }

    #[test]
    fn rejects_bad_rules() {
        let names = default_names(2);
        let bad = RewriteSystem::quadratic(
            names.clone(),
            vec![((1, 0), NcPoly::word(&[1, 0, 0], 1))],
        );
        assert!(matches!(bad, Err(Error::NonOrientable { .. })));
        let asc = RewriteSystem::quadratic(names.clone(), vec![((0, 1), NcPoly::zero())]);
        assert!(matches!(asc, Err(Error::NonOrientable { .. })));
        let dup = RewriteSystem::quadratic(
            names.clone(),
            vec![((1, 0), NcPoly::zero()), ((1, 0), NcPoly::zero())],
        );
        assert!(matches!(dup, Err(Error::DuplicateRule(_))));
        let range = RewriteSystem::quadratic(names, vec![((2, 0), NcPoly::zero())]);
        assert!(matches!(range, Err(Error::GeneratorOutOfRange(2))));
    }

    #[test]
    fn non_confluent_system_is_detected() {
        // a bracket violating Jacobi: [e1,e0] = e0, [e2,e1] = e1, [e2,e0] = 0
        let s = RewriteSystem::quadratic(
            default_names(3),
            vec![
                ((1, 0), NcPoly::word(&[0, 1], 1).add(&NcPoly::word(&[0], 1))),
                ((2, 1), NcPoly::word(&[1, 2], 1).add(&NcPoly::word(&[1], 1))),
                ((2, 0), NcPoly::word(&[0, 2], 1)),
            ],
        )
        .unwrap();
        let rep = s.diamond_check();
        assert_eq!(rep.overlaps_checked, 1);
        assert!(!rep.is_confluent());
    }

    #[test]
    fn random_strategy_agrees() {
        let s = quantum_plane(3);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let p = NcPoly::word(&[1, 0, 1, 1, 0], 3).add(&NcPoly::word(&[1, 1, 0], 3));
        assert_eq!(s.nf(&p), s.nf_random(&p, &mut rng));
    }

    #[test]
    fn power_rules_and_hilbert() {
        let s = quantum_plane(3)
            .with_power_rules(&[(0, 3, CycElem::from_int(3, 2)), (1, 3, CycElem::one(3))])
            .unwrap();
        assert!(s.diamond_check().is_confluent());
        let counts: Vec<usize> = s.irreducible_words(6).iter().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 2, 1, 0, 0]);
        let p = NcPoly::word(&[0, 0, 0, 1], 3);
        assert_eq!(s.nf(&p), NcPoly::monomial(Word::letter(1), CycElem::from_int(3, 2)));
    }

    #[test]
    fn eval_rep_of_relation() {
        let z = CycElem::zeta(3, 1);
        let x = Matrix::from_rows(
            vec![
                vec![CycElem::one(3), CycElem::zero(3)],
                vec![CycElem::zero(3), z.clone()],
            ],
            3,
        )
        .unwrap();
        let y = Matrix::from_rows(
            vec![
                vec![CycElem::zero(3), CycElem::one(3)],
                vec![CycElem::zero(3), CycElem::zero(3)],
            ],
            3,
        )
        .unwrap();
        // x y = ζ^{-1} y x holds: y x = ζ y, x y = y
        let rel = NcPoly::word(&[0, 1], 3).sub(&NcPoly::monomial(
            Word::from_indices(&[1, 0]),
            CycElem::zeta(3, -1),
        ));
        assert!(eval_rep(&rel, &[x, y]).unwrap().is_zero());
    }
}
