//! Hilbert series `N(t) / Π(1 - t^{w_i})` of the coordinate ring of the
//! weighted torus and of the semigroup algebra, with exact integer
//! polynomial arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::semigroup::{SemigroupData, WeightVector};

/// Sparse polynomial in `t` with integer coefficients; zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: BTreeMap<u64, i64>,
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: u64) -> Self {
        &Self::one() - &Self::monomial(1, k)
    }

    pub fn from_terms(terms: &[(u64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: u64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> i64 {
        self.coeffs.values().next_back().copied().unwrap_or(0)
    }

    pub fn coeff(&self, exp: u64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Exact quotient, verified by re-multiplication.
    pub fn divide_exact(&self, divisor: &IntegerPolynomial) -> Result<IntegerPolynomial> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let d_lead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quotient = IntegerPolynomial::zero();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let r_lead = rem.leading_coeff();
            if r_lead % d_lead != 0 {
                return Err(Error::InexactDivision);
            }
            let term = IntegerPolynomial::monomial(r_lead / d_lead, r_deg - d_deg);
            rem = &rem - &(&term * divisor);
            quotient = &quotient + &term;
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        debug_assert_eq!(&(&quotient * divisor), self);
        Ok(quotient)
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let mut out = IntegerPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match i {
                0 if c < 0 => write!(f, "-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.unsigned_abs();
            match (e, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => write!(f, "t")?,
                (_, 1) => write!(f, "t^{e}")?,
                (1, _) => write!(f, "{abs}t")?,
                _ => write!(f, "{abs}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntegerPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms().collect::<Vec<_>>().serialize(serializer)
    }
}

/// `numerator / Π_i (1 - t^{denominator[i]})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: IntegerPolynomial,
    pub denominator: Vec<u64>,
    /// Field order for the torus series, `None` for the semigroup algebra.
    pub q: Option<u64>,
}

impl HilbertSeries {
    pub fn denominator_poly(&self) -> IntegerPolynomial {
        self.denominator
            .iter()
            .fold(IntegerPolynomial::one(), |acc, &w| {
                &acc * &IntegerPolynomial::one_minus_t_pow(w)
            })
    }

    /// Degree of the series as a rational function. The numerator's top
    /// coefficient is nonzero by construction, so nothing cancels.
    pub fn a_invariant(&self) -> i64 {
        let deg = self.numerator.degree().expect("nonzero numerator") as i64;
        deg - self.denominator.iter().sum::<u64>() as i64
    }

    /// `a-invariant + 1`.
    pub fn regularity(&self) -> i64 {
        self.a_invariant() + 1
    }

    /// Power-series coefficients of `t^0 .. t^n`.
    pub fn expand(&self, n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n + 1];
        for (e, coeff) in self.numerator.terms() {
            if (e as usize) <= n {
                c[e as usize] = coeff;
            }
        }
        // dividing by (1 - t^w) is a stride-w prefix sum
        for &w in &self.denominator {
            let w = w as usize;
            for j in w..=n {
                c[j] += c[j - w];
            }
        }
        c
    }

    /// `N1 * D2 = N2 * D1`.
    pub fn same_series(&self, other: &HilbertSeries) -> bool {
        &self.numerator * &other.denominator_poly() == &other.numerator * &self.denominator_poly()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ", self.numerator)?;
        for w in &self.denominator {
            write!(f, "(1 - t^{w})")?;
        }
        Ok(())
    }
}

/// `Σ_{j < m} t^{j k} = (1 - t^{m k}) / (1 - t^k)`.
fn geometric(m: u64, k: u64) -> IntegerPolynomial {
    IntegerPolynomial::from_terms(&(0..m).map(|j| (j * k, 1)).collect::<Vec<_>>())
}

/// Numerator `(1/(1 - t^u) - Σ_{a∈G} t^{a u}) Π (1 - t^{w_i u})` for
/// `u = q - 1`, kept polynomial by folding the first factor into the
/// geometric sum.
fn numerator_for(unit: u64, w: &WeightVector) -> IntegerPolynomial {
    let sg = SemigroupData::new(w);
    let first = IntegerPolynomial::one_minus_t_pow(w[0] * unit);
    let gaps = IntegerPolynomial::from_terms(
        &sg.gaps().iter().map(|&a| (a * unit, 1)).collect::<Vec<_>>(),
    );
    let head = &geometric(w[0], unit) - &(&gaps * &first);
    w.as_slice()[1..].iter().fold(head, |acc, &wi| {
        &acc * &IntegerPolynomial::one_minus_t_pow(wi * unit)
    })
}

/// Hilbert series of `K[t_1..t_s] / I_T` over GF(q).
pub fn torus_hilbert_series(q: u64, w: &WeightVector) -> Result<HilbertSeries> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Ok(HilbertSeries {
        numerator: numerator_for(q - 1, w),
        denominator: w.as_slice().to_vec(),
        q: Some(q),
    })
}

/// Hilbert series `Σ_{a∈Q} t^a` of the semigroup algebra `K[Q]`.
pub fn semigroup_hilbert_series(w: &WeightVector) -> HilbertSeries {
    HilbertSeries {
        numerator: numerator_for(1, w),
        denominator: w.as_slice().to_vec(),
        q: None,
    }
}

/// Coefficient of `t^d`, the Hilbert function at `d`.
pub fn hilbert_function(hs: &HilbertSeries, d: i64) -> Result<u64> {
    if d < 0 {
        return Err(Error::NegativeDegree(d));
    }
    let c = hs.expand(d as usize)[d as usize];
    u64::try_from(c).map_err(|_| Error::OutOfRange(format!("negative coefficient {c} at t^{d}")))
}

/// Closed form `(q-2)(Σ w_i + g) + g + 1`, with `g = -1` when `Q = N`.
pub fn index_of_regularity(q: u64, w: &WeightVector, frobenius: i64) -> Result<i64> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    if frobenius < -1 {
        return Err(Error::InvalidWeights(format!(
            "Frobenius number {frobenius} below -1"
        )));
    }
    Ok((q as i64 - 2) * (w.sum() as i64 + frobenius) + frobenius + 1)
}
