//! Arithmetic in GF(q), q = p^n <= 2^16.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`
//! of its coefficient vector in the polynomial basis `1, x, ..., x^{n-1}`.
//! Two elements are equal iff their coefficient vectors are equal, and the
//! integer order is the coefficient-lexicographic order with the top
//! coefficient most significant. Multiplication goes through exp/log tables
//! built from the distinguished generator `alpha`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{prime_factors, prime_power};
use crate::error::{Error, Result};

pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Inner {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    alpha: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field. Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.inner.p)
            .field("n", &self.inner.n)
            .field("modulus", &self.inner.modulus)
            .field("alpha", &self.inner.alpha)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.q == other.inner.q && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for Field {}

// Polynomials over GF(p) as little-endian coefficient vectors.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p) as u64;
    while r.len() > dm {
        let top = r.len() - 1;
        let factor = r[top] as u64 * lead_inv % p as u64;
        let shift = top - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = factor * c as u64 % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

fn digits(mut index: u32, p: u32, n: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(n as usize);
    for _ in 0..n {
        out.push(index % p);
        index /= p;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() as u32 - 1;
    for deg in 1..=n / 2 {
        for lower in 0..p.pow(deg) {
            let mut g = digits(lower, p, deg);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `n` over GF(p).
fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0, 1];
    }
    (0..p.pow(n))
        .map(|lower| {
            let mut f = digits(lower, p, n);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

fn mulmod(a: u32, b: u32, p: u32, n: u32, modulus: &[u32]) -> u32 {
    let prod = poly_mul(&trim(digits(a, p, n)), &trim(digits(b, p, n)), p);
    undigits(&poly_rem(&prod, modulus, p), p)
}

fn powmod(mut base: u32, mut e: u64, p: u32, n: u32, modulus: &[u32]) -> u32 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p, n, modulus);
        }
        base = mulmod(base, base, p, n, modulus);
        e >>= 1;
    }
    acc
}

impl Field {
    /// Builds GF(q) with the smallest irreducible modulus and the smallest
    /// generator of the multiplicative group.
    pub fn new(q: u64) -> Result<Field> {
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let (p, q) = (p as u32, q as u32);
        let modulus = smallest_irreducible(p, n);
        let order = (q - 1) as u64;
        let cofactors: Vec<u64> = prime_factors(order)
            .into_iter()
            .map(|r| order / r)
            .collect();
        let alpha = (1..q)
            .find(|&g| cofactors.iter().all(|&c| powmod(g, c, p, n, &modulus) != 1))
            .expect("the multiplicative group is cyclic");

        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1;
        for k in 0..order as u32 {
            exp.push(x);
            log[x as usize] = k;
            x = mulmod(x, alpha, p, n, &modulus);
        }
        debug_assert_eq!(x, 1);

        Ok(Field {
            inner: Arc::new(Inner {
                p,
                n,
                q,
                modulus,
                alpha: FieldElement(alpha),
                exp,
                log,
            }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p as u64
    }

    pub fn n(&self) -> u32 {
        self.inner.n
    }

    pub fn q(&self) -> u64 {
        self.inner.q as u64
    }

    /// Monic modulus, little-endian, including the leading 1. For prime
    /// fields this is the trivial modulus `x`.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn alpha(&self) -> FieldElement {
        self.inner.alpha
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element with the given integer encoding.
    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.inner.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::OutOfRange(format!(
                "element index {index} not below q = {}",
                self.inner.q
            )))
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.inner.n as usize {
            return Err(Error::LengthMismatch {
                expected: self.inner.n as usize,
                found: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.inner.p) {
            return Err(Error::OutOfRange(format!(
                "coefficient {c} not below p = {}",
                self.inner.p
            )));
        }
        Ok(FieldElement(undigits(coeffs, self.inner.p)))
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        digits(x.0, self.inner.p, self.inner.n)
    }

    /// All elements in index order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.inner.q).map(FieldElement)
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let Inner { p, n, .. } = *self.inner;
        if p == 2 {
            return FieldElement(x.0 ^ y.0);
        }
        if n == 1 {
            return FieldElement((x.0 + y.0) % p);
        }
        let (mut a, mut b, mut place, mut out) = (x.0, y.0, 1, 0);
        for _ in 0..n {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let Inner { p, n, .. } = *self.inner;
        if p == 2 {
            return x;
        }
        let (mut a, mut place, mut out) = (x.0, 1, 0);
        for _ in 0..n {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.is_zero() || y.is_zero() {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        let k = (inner.log[x.0 as usize] + inner.log[y.0 as usize]) % (inner.q - 1);
        FieldElement(inner.exp[k as usize])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.inner;
        let k = (inner.q - 1 - inner.log[x.0 as usize]) % (inner.q - 1);
        Ok(FieldElement(inner.exp[k as usize]))
    }

    /// `x^e`; negative exponents require `x != 0`, and `0^0 = 1`.
    pub fn pow(&self, x: FieldElement, e: i64) -> Result<FieldElement> {
        if x.is_zero() {
            return match e {
                0 => Ok(FieldElement::ONE),
                e if e > 0 => Ok(FieldElement::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let k = self.inner.log[x.0 as usize] as i64;
        Ok(self.alpha_pow(k * e.rem_euclid(self.q() as i64 - 1)))
    }

    /// `alpha^k` for any integer `k`.
    pub fn alpha_pow(&self, k: i64) -> FieldElement {
        let order = self.q() as i64 - 1;
        FieldElement(self.inner.exp[k.rem_euclid(order) as usize])
    }

    /// The `k` in `[0, q-1)` with `alpha^k = x`.
    pub fn discrete_log(&self, x: FieldElement) -> Result<u32> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inner.log[x.0 as usize])
    }

    /// Generator-power notation: `0` or `a^k`.
    pub fn format_power(&self, x: FieldElement) -> String {
        match self.discrete_log(x) {
            Ok(k) => format!("a^{k}"),
            Err(_) => "0".to_string(),
        }
    }

    /// Polynomial notation in `x`, e.g. `x+1` or `2x^2+1`.
    pub fn format_poly(&self, x: FieldElement) -> String {
        let coeffs = self.coeffs(x);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let var = match i {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                };
                match (c, i) {
                    (_, 0) => c.to_string(),
                    (1, _) => var,
                    _ => format!("{c}{var}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// Parses `0`, `a`, `a^k` (k may be negative) or a polynomial in `x`
    /// with nonnegative integer coefficients, such as `x^2+2x+1` or `3`.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid field element {text:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        if let Some(rest) = s.strip_prefix('a') {
            let k: i64 = match rest.strip_prefix('^') {
                Some(e) => e.parse().map_err(|_| bad())?,
                None if rest.is_empty() => 1,
                None => return Err(bad()),
            };
            return Ok(self.alpha_pow(k));
        }
        let p = self.inner.p as u64;
        let mut coeffs = vec![0u64; self.inner.n as usize];
        for term in s.split('+') {
            let (coef, power) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let power = match &term[pos + 1..] {
                        "" => 1,
                        e => e
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse()
                            .map_err(|_| bad())?,
                    };
                    (&term[..pos], power)
                }
            };
            let coef: u64 = match coef {
                "" if power > 0 => 1,
                c => c.parse().map_err(|_| bad())?,
            };
            let slot = coeffs.get_mut(power).ok_or_else(bad)?;
            *slot = (*slot + coef % p) % p;
        }
        let coeffs: Vec<u32> = coeffs.into_iter().map(|c| c as u32).collect();
        self.from_coeffs(&coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f = Field::new(5).unwrap();
        assert_eq!((f.p(), f.n(), f.q()), (5, 1, 5));
        assert_eq!(f.alpha(), FieldElement(2));
        assert_eq!(f.inv(FieldElement(2)).unwrap(), FieldElement(3));
        assert_eq!(f.discrete_log(FieldElement(3)).unwrap(), 3);
    }

    #[test]
    fn gf4_modulus_and_alpha() {
        let f = Field::new(4).unwrap();
        assert_eq!((f.p(), f.n()), (2, 2));
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let a = f.alpha();
        assert_eq!(f.format_poly(a), "x");
        assert_eq!(f.format_poly(f.mul(a, a)), "x+1");
        for x in f.elements() {
            assert_eq!(f.add(x, x), f.zero());
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(Field::new(6).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(Field::new(1).unwrap_err(), Error::NotPrimePower(1));
        assert_eq!(
            Field::new(1 << 17).unwrap_err(),
            Error::FieldTooLarge(1 << 17)
        );
        assert!(Field::new(1 << 16).is_ok());
    }

    #[test]
    fn zero_has_no_inverse_or_log() {
        let f = Field::new(9).unwrap();
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.discrete_log(f.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.pow(f.zero(), -1), Err(Error::DivisionByZero));
        assert_eq!(f.pow(f.zero(), 0).unwrap(), f.one());
        assert_eq!(f.pow(f.zero(), 3).unwrap(), f.zero());
    }

    #[test]
    fn negative_powers() {
        let f = Field::new(7).unwrap();
        for x in f.nonzero_elements() {
            let inv = f.inv(x).unwrap();
            assert_eq!(f.pow(x, -1).unwrap(), inv);
            assert_eq!(f.pow(x, -3).unwrap(), f.pow(inv, 3).unwrap());
        }
    }

    #[test]
    fn notation_round_trip() {
        for q in [2, 4, 5, 8, 9, 25, 27] {
            let f = Field::new(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.parse_element(&f.format_power(x)).unwrap(), x);
                assert_eq!(f.parse_element(&f.format_poly(x)).unwrap(), x);
            }
        }
        let f = Field::new(4).unwrap();
        assert_eq!(f.parse_element("a").unwrap(), f.alpha());
        assert_eq!(
            f.parse_element("x + 1").unwrap(),
            f.mul(f.alpha(), f.alpha())
        );
        assert!(f.parse_element("y").is_err());
        assert!(f.parse_element("x^2").is_err());
    }
}
