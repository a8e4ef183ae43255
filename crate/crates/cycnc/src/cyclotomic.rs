//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! Elements are stored as coefficient vectors in the power basis
//! 1, ζ, …, ζ^{φ(n)−1}, reduced modulo the cyclotomic polynomial Φ_n.
//! Binary operations on elements of different orders embed both operands
//! into the field of order lcm(m, n) first.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number (always reduced, positive denominator).
pub type Rational = BigRational;

/// Integer polynomial coefficients, lowest degree first.
fn poly_divexact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = den[dl - 1].clone();
    let mut quot = vec![BigInt::zero(); rem.len() + 1 - dl];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dl - 1] / &lead;
        if !c.is_zero() {
            for (t, d) in den.iter().enumerate() {
                rem[k + t] -= &c * d;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<BigInt>>>> = RefCell::new(HashMap::new());
    static FIELD_CACHE: RefCell<HashMap<u32, Rc<Field>>> = RefCell::new(HashMap::new());
}

/// The n-th cyclotomic polynomial Φ_n, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = PHI_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return (*p).clone();
    }
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_divexact(&p, &cyclotomic_poly(d));
        }
    }
    PHI_CACHE.with(|c| c.borrow_mut().insert(n, Rc::new(p.clone())));
    p
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Per-order data: φ(n) and the reduced powers ζ^j for 0 ≤ j < n.
struct Field {
    phi: usize,
    modulus: Vec<Rational>,
    powers: Vec<Vec<(usize, Rational)>>,
}

fn field(n: u32) -> Rc<Field> {
    if let Some(f) = FIELD_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return f;
    }
    let phi_poly = cyclotomic_poly(n);
    let phi = phi_poly.len() - 1;
    let modulus: Vec<Rational> = phi_poly.iter().cloned().map(Rational::from_integer).collect();
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![Rational::zero(); phi];
    cur[0] = Rational::one();
    for _ in 0..n {
        powers.push(
            cur.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        );
        // multiply by ζ
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = Rational::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] -= &top * &modulus[i];
            }
        }
    }
    let f = Rc::new(Field {
        phi,
        modulus,
        powers,
    });
    FIELD_CACHE.with(|c| c.borrow_mut().insert(n, f.clone()));
    f
}

/// An element of ℚ(ζ_n).
#[derive(Clone, Debug)]
pub struct CycElem {
    order: u32,
    coeffs: Vec<Rational>,
}

fn check_order(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("cyclotomic order must be positive".into()))
    } else {
        Ok(())
    }
}

impl CycElem {
    pub fn zero(order: u32) -> Self {
        let phi = field(order).phi;
        CycElem {
            order,
            coeffs: vec![Rational::zero(); phi],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[0] = q;
        e
    }

    pub fn from_int(order: u32, k: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(BigInt::from(k)))
    }

    pub fn from_frac(order: u32, num: i64, den: i64) -> Self {
        Self::from_rational(order, Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds Σ c_k ζ^k from arbitrary-length coefficients, reducing mod Φ_n.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        let f = field(order);
        let mut out = vec![Rational::zero(); f.phi];
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < f.phi {
                out[k] += c;
            } else {
                for (i, p) in &f.powers[k % order as usize] {
                    out[*i] += &c * p;
                }
            }
        }
        CycElem { order, coeffs: out }
    }

    pub fn from_int_coeffs(order: u32, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            order,
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// ζ_n^k for any integer k.
    pub fn zeta(order: u32, k: i64) -> Self {
        let f = field(order);
        let j = k.rem_euclid(order as i64) as usize;
        let mut e = Self::zero(order);
        for (i, c) in &f.powers[j] {
            e.coeffs[*i] = c.clone();
        }
        e
    }

    pub fn try_zeta(order: u32, k: i64) -> Result<Self> {
        check_order(order)?;
        Ok(Self::zeta(order, k))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(q) when the element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in ℚ(ζ_n) for a multiple n of its order.
    pub fn embed(&self, n: u32) -> Result<Self> {
        check_order(n)?;
        if n == self.order {
            return Ok(self.clone());
        }
        if !n.is_multiple_of(self.order) {
            return Err(Error::IncompatibleOrder {
                from: self.order,
                to: n,
            });
        }
        let step = (n / self.order) as usize;
        let mut spread = vec![Rational::zero(); step * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            spread[k * step] = c.clone();
        }
        Ok(Self::from_coeffs(n, spread))
    }

    fn lifted(&self, n: u32) -> std::borrow::Cow<'_, CycElem> {
        if self.order == n {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.embed(n).expect("lcm embedding"))
        }
    }

    fn common_order(&self, other: &Self) -> u32 {
        if self.order == other.order {
            self.order
        } else {
            self.order.lcm(&other.order)
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(self.order, q.recip()));
        }
        let f = field(self.order);
        // extended Euclid on (a, Φ_n) over ℚ
        let mut r0 = trim(f.modulus.clone());
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !(r1.len() == 1) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd of positive degree; impossible for irreducible Φ_n
                return Err(Error::DivisionByZero);
            }
        }
        let c = r1[0].recip();
        let coeffs = s1.into_iter().map(|x| x * &c).collect();
        Ok(Self::from_coeffs(self.order, coeffs))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Non-negative power; never fails.
    pub fn powu(&self, e: u64) -> Self {
        self.pow(e as i64).expect("non-negative power")
    }

    /// Parses a literal such as `1/3*z^2 - 2*z + 1` in ℚ(ζ_order).
    pub fn parse(s: &str, order: u32) -> Result<Self> {
        check_order(order)?;
        Parser::new(s).parse(order)
    }

    pub fn random<R: rand::Rng>(order: u32, rng: &mut R, bound: i64) -> Self {
        let phi = field(order).phi;
        let coeffs = (0..phi)
            .map(|_| {
                let num = rng.gen_range(-bound..=bound);
                let den = rng.gen_range(1..=bound.max(1));
                Rational::new(BigInt::from(num), BigInt::from(den))
            })
            .collect();
        CycElem { order, coeffs }
    }
}

/// [i]_q = 1 + q + ⋯ + q^{i−1}; [0]_q = 0.
pub fn q_int(i: u32, q: &CycElem) -> CycElem {
    let mut acc = CycElem::zero(q.order());
    let mut p = CycElem::one(q.order());
    for _ in 0..i {
        acc += &p;
        p = &p * q;
    }
    acc
}

/// Least k ≥ 1 with q^k = 1, searched up to `bound`.
pub fn multiplicative_order(q: &CycElem, bound: u32) -> Option<u32> {
    let mut p = q.clone();
    for k in 1..=bound {
        if p.is_one() {
            return Some(k);
        }
        p = &p * q;
    }
    None
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (vec![], trim(rem));
    }
    let lead = b[b.len() - 1].clone();
    let mut quot = vec![Rational::zero(); rem.len() + 1 - b.len()];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + b.len() - 1] / &lead;
        if !c.is_zero() {
            for (t, d) in b.iter().enumerate() {
                rem[k + t] -= &c * d;
            }
        }
        quot[k] = c;
    }
    rem.truncate(b.len() - 1);
    (trim(quot), trim(rem))
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let n = self.common_order(other);
        self.lifted(n).coeffs == other.lifted(n).coeffs
    }
}

impl Eq for CycElem {}

impl<'a> Add<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        let n = self.common_order(rhs);
        let (a, b) = (self.lifted(n), rhs.lifted(n));
        CycElem {
            order: n,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        let n = self.common_order(rhs);
        let (a, b) = (self.lifted(n), rhs.lifted(n));
        CycElem {
            order: n,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        let n = self.common_order(rhs);
        let (a, b) = (self.lifted(n), rhs.lifted(n));
        if let Some(q) = a.to_rational() {
            return CycElem {
                order: n,
                coeffs: b.coeffs.iter().map(|y| &q * y).collect(),
            };
        }
        if let Some(q) = b.to_rational() {
            return CycElem {
                order: n,
                coeffs: a.coeffs.iter().map(|x| x * &q).collect(),
            };
        }
        let phi = a.coeffs.len();
        let mut conv = vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        CycElem::from_coeffs(n, conv)
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<CycElem> for CycElem {
            type Output = CycElem;
            fn $f(self, rhs: CycElem) -> CycElem {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a CycElem> for CycElem {
            type Output = CycElem;
            fn $f(self, rhs: &CycElem) -> CycElem {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<CycElem> for &'a CycElem {
            type Output = CycElem;
            fn $f(self, rhs: CycElem) -> CycElem {
                self.$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&CycElem> for CycElem {
    fn add_assign(&mut self, rhs: &CycElem) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycElem> for CycElem {
    fn sub_assign(&mut self, rhs: &CycElem) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&CycElem> for CycElem {
    fn mul_assign(&mut self, rhs: &CycElem) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycElem {
    /// Canonical literal: highest power first, e.g. `1/3*z^2 - 2*z + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                out.push_str(&fmt_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_rational(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            idx: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.idx)
            .map(|&(p, _)| p)
            .unwrap_or(self.src.len())
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.idx;
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.idx += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            self.idx = start;
            return self.err("expected digits");
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn term(&mut self, order: u32) -> Result<CycElem> {
        let mut coeff = Rational::one();
        let mut have_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let mut q = Rational::from_integer(num);
            if self.peek() == Some('/') {
                self.idx += 1;
                let den = self.integer()?;
                if den.is_zero() {
                    self.idx -= 1;
                    return self.err("zero denominator");
                }
                q /= Rational::from_integer(den);
            }
            coeff = q;
            have_coeff = true;
            if self.peek() == Some('*') {
                self.idx += 1;
                if self.peek() != Some('z') {
                    return self.err("expected 'z' after '*'");
                }
            }
        }
        if self.peek() == Some('z') {
            self.idx += 1;
            let mut exp = BigInt::one();
            if self.peek() == Some('^') {
                self.idx += 1;
                let neg = if self.peek() == Some('-') {
                    self.idx += 1;
                    true
                } else {
                    false
                };
                exp = self.integer()?;
                if neg {
                    exp = -exp;
                }
            }
            let k = exp
                .mod_floor(&BigInt::from(order))
                .to_i64()
                .expect("reduced exponent");
            let z = CycElem::zeta(order, k);
            return Ok(&z * &CycElem::from_rational(order, coeff));
        }
        if !have_coeff {
            return self.err("expected number or 'z'");
        }
        Ok(CycElem::from_rational(order, coeff))
    }

    fn parse(mut self, order: u32) -> Result<CycElem> {
        if self.chars.is_empty() {
            return self.err("empty literal");
        }
        let mut acc = CycElem::zero(order);
        let mut first = true;
        loop {
            let mut sign = 1;
            match self.peek() {
                Some('+') if !first => self.idx += 1,
                Some('-') => {
                    sign = -1;
                    self.idx += 1
                }
                Some(_) if first => {}
                None => break,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            let t = self.term(order)?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(euler_phi(15), 8);
    }

    #[test]
    fn zeta_powers_reduce() {
        let z = CycElem::zeta(3, 2);
        assert_eq!(z, CycElem::from_int_coeffs(3, &[-1, -1]));
        assert!(CycElem::zeta(5, 5).is_one());
        assert_eq!(CycElem::zeta(4, -1), -CycElem::zeta(4, 1));
    }

    #[test]
    fn q_integer_vanishes_at_root_of_unity() {
        let z = CycElem::zeta(3, 1);
        assert!(q_int(3, &z).is_zero());
        assert!(q_int(0, &z).is_zero());
        assert!(q_int(1, &z).is_one());
    }

    #[test]
    fn norm_of_one_minus_zeta() {
        let one = CycElem::one(3);
        let p = (&one - &CycElem::zeta(3, 1)) * (&one - &CycElem::zeta(3, 2));
        assert_eq!(p, CycElem::from_int(3, 3));
    }

    #[test]
    fn embedding_and_mixed_orders() {
        let m = CycElem::zeta(2, 1).embed(4).unwrap();
        assert_eq!(m, CycElem::from_int(4, -1));
        assert!(CycElem::zeta(3, 1).embed(4).is_err());
        let s = &CycElem::zeta(2, 1) + &CycElem::zeta(3, 1);
        assert_eq!(s.order(), 6);
        // ζ₆² = ζ₃
        assert_eq!(CycElem::zeta(6, 2), CycElem::zeta(3, 1));
    }

    #[test]
    fn inverse() {
        let x = CycElem::parse("2*z^3 - z + 5", 7).unwrap();
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(CycElem::zero(5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn literal_round_trip() {
        let x = CycElem::parse("1/3*z^2 - 2*z + 1", 5).unwrap();
        assert_eq!(x.to_string(), "1/3*z^2 - 2*z + 1");
        assert_eq!(CycElem::parse(" 1/3 * z^2-2z+1 ", 5).unwrap(), x);
        assert_eq!(CycElem::parse("z^4", 5).unwrap().to_string(), "-z^3 - z^2 - z - 1");
        assert_eq!(CycElem::parse("-z", 3).unwrap().to_string(), "-z");
        assert_eq!(CycElem::zero(3).to_string(), "0");
        assert_eq!(CycElem::parse("z^-1", 4).unwrap(), CycElem::zeta(4, 3));
    }

    #[test]
    fn parse_errors_report_position() {
        match CycElem::parse("1 + * z", 3) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(CycElem::parse("1/0", 3), Err(Error::Parse { .. })));
        assert!(matches!(CycElem::parse("", 3), Err(Error::Parse { .. })));
        assert!(matches!(CycElem::parse("2 z z", 3), Err(Error::Parse { .. })));
    }
}
