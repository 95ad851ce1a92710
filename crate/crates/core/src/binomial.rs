//! Pure binomials `t^a - t^b`, the defining lattice `(q-1)(w^⊥ ∩ Z^s)` and
//! brute-force vanishing on the torus.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::guard;
use crate::par::{self, Execution};
use crate::semigroup::WeightVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(e: Vec<u64>) -> Self {
        ExponentVector(e)
    }

    pub fn zero(s: usize) -> Self {
        ExponentVector(vec![0; s])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, m: u64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|e| e * m).collect())
    }

    /// Writes the monomial as `t1^2*t3`, or `1` for the constant.
    fn write_monomial(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("t{}", i + 1),
                _ => format!("t{}^{}", i + 1, e),
            })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }

    fn parse_monomial(text: &str, s: usize) -> Result<ExponentVector> {
        let bad = || Error::Parse(format!("invalid monomial {text:?}"));
        let mut e = vec![0u64; s];
        if text == "1" {
            return Ok(ExponentVector(e));
        }
        for factor in text.split('*') {
            let body = factor.strip_prefix('t').ok_or_else(bad)?;
            let (var, power) = match body.split_once('^') {
                Some((v, p)) => (v, p.parse::<u64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let var: usize = var.parse().map_err(|_| bad())?;
            if var == 0 || var > s {
                return Err(Error::Parse(format!("variable t{var} outside t1..t{s}")));
            }
            e[var - 1] += power;
        }
        Ok(ExponentVector(e))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_monomial(f)
    }
}

/// `t^a - t^b` with `a != b`. Equality ignores the order of the two sides.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawBinomial")]
pub struct Binomial {
    a: ExponentVector,
    b: ExponentVector,
}

#[derive(Deserialize)]
struct RawBinomial {
    a: ExponentVector,
    b: ExponentVector,
}

impl TryFrom<RawBinomial> for Binomial {
    type Error = Error;

    fn try_from(raw: RawBinomial) -> Result<Self> {
        Binomial::new(raw.a, raw.b)
    }
}

impl PartialEq for Binomial {
    fn eq(&self, other: &Self) -> bool {
        (self.a == other.a && self.b == other.b) || (self.a == other.b && self.b == other.a)
    }
}

impl Eq for Binomial {}

impl Binomial {
    pub fn new(a: ExponentVector, b: ExponentVector) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        if a == b {
            return Err(Error::ZeroBinomial);
        }
        Ok(Binomial { a, b })
    }

    pub fn from_slices(a: &[u64], b: &[u64]) -> Result<Self> {
        Binomial::new(
            ExponentVector::new(a.to_vec()),
            ExponentVector::new(b.to_vec()),
        )
    }

    pub fn a(&self) -> &ExponentVector {
        &self.a
    }

    pub fn b(&self) -> &ExponentVector {
        &self.b
    }

    pub fn num_vars(&self) -> usize {
        self.a.len()
    }

    /// `a - b` as signed integers.
    pub fn difference(&self) -> Vec<i64> {
        self.a
            .as_slice()
            .iter()
            .zip(self.b.as_slice())
            .map(|(&x, &y)| x as i64 - y as i64)
            .collect()
    }

    /// `t^{m a} - t^{m b}`.
    pub fn scaled(&self, m: u64) -> Binomial {
        assert!(m >= 1, "scaling factor must be positive");
        Binomial {
            a: self.a.scaled(m),
            b: self.b.scaled(m),
        }
    }

    /// Parses `t1^9 - t2^3*t3^3` over `s` variables.
    pub fn parse(text: &str, s: usize) -> Result<Binomial> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (lhs, rhs) = compact
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("expected `lhs - rhs`, got {text:?}")))?;
        Binomial::new(
            ExponentVector::parse_monomial(lhs, s)?,
            ExponentVector::parse_monomial(rhs, s)?,
        )
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.a.write_monomial(f)?;
        write!(f, " - ")?;
        self.b.write_monomial(f)
    }
}

fn check_len(len: usize, w: &WeightVector) -> Result<()> {
    if len != w.len() {
        Err(Error::LengthMismatch {
            expected: w.len(),
            found: len,
        })
    } else {
        Ok(())
    }
}

/// `⟨e, w⟩`.
pub fn weighted_degree(e: &ExponentVector, w: &WeightVector) -> Result<u64> {
    check_len(e.len(), w)?;
    Ok(e.as_slice()
        .iter()
        .zip(w.as_slice())
        .map(|(e, w)| e * w)
        .sum())
}

pub fn is_homogeneous(bin: &Binomial, w: &WeightVector) -> Result<bool> {
    Ok(weighted_degree(&bin.a, w)? == weighted_degree(&bin.b, w)?)
}

/// Whether `a - b ∈ (q-1)(w^⊥ ∩ Z^s)`.
pub fn in_defining_lattice(bin: &Binomial, q: u64, w: &WeightVector) -> Result<bool> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let congruent = bin
        .difference()
        .iter()
        .all(|d| d.rem_euclid(q as i64 - 1) == 0);
    Ok(congruent && is_homogeneous(bin, w)?)
}

pub fn scale_binomial(bin: &Binomial, m: u64) -> Binomial {
    bin.scaled(m)
}

/// Evaluates `x^a - x^b` at every `x ∈ (K*)^s`.
pub fn vanishes_on_affine_torus(bin: &Binomial, field: &Field, w: &WeightVector) -> Result<bool> {
    vanishes_on_affine_torus_with(bin, field, w, Execution::default())
}

pub fn vanishes_on_affine_torus_with(
    bin: &Binomial,
    field: &Field,
    w: &WeightVector,
    exec: Execution,
) -> Result<bool> {
    check_len(bin.num_vars(), w)?;
    let s = w.len();
    let units = field.q() - 1;
    let total = guard::pow_u128(units, s as u64);
    guard::check(total, guard::enumeration_limit())?;

    let nonzero: Vec<FieldElement> = field.nonzero_elements().collect();
    let powers = |e: &ExponentVector| -> Vec<Vec<FieldElement>> {
        e.as_slice()
            .iter()
            .map(|&k| {
                nonzero
                    .iter()
                    .map(|&x| field.pow(x, k as i64).expect("x is nonzero"))
                    .collect()
            })
            .collect()
    };
    let (pa, pb) = (powers(&bin.a), powers(&bin.b));

    Ok(par::all_indices(exec, total as u64, |mut idx| {
        let (mut lhs, mut rhs) = (field.one(), field.one());
        for i in 0..s {
            let x = (idx % units) as usize;
            idx /= units;
            lhs = field.mul(lhs, pa[i][x]);
            rhs = field.mul(rhs, pb[i][x]);
        }
        lhs == rhs
    }))
}

/// Homogeneous and vanishing on the weighted torus.
pub fn in_vanishing_ideal(bin: &Binomial, field: &Field, w: &WeightVector) -> Result<bool> {
    Ok(is_homogeneous(bin, w)? && vanishes_on_affine_torus(bin, field, w)?)
}

/// `t_i^{w_1(q-1)} - t_1^{w_i(q-1)}` for `i = 2..s`.
pub fn basic_torus_binomials(q: u64, w: &WeightVector) -> Vec<Binomial> {
    let s = w.len();
    (1..s)
        .map(|i| {
            let mut a = vec![0; s];
            let mut b = vec![0; s];
            a[i] = w[0] * (q - 1);
            b[0] = w[i] * (q - 1);
            Binomial {
                a: ExponentVector(a),
                b: ExponentVector(b),
            }
        })
        .collect()
}
