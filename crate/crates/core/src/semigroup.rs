//! The numerical semigroup generated by the weights.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd_all, lcm};
use crate::binomial::{Binomial, ExponentVector};
use crate::error::{Error, Result};

/// Positive weights with gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWeights("weights must be positive".into()));
        }
        let g = gcd_all(&weights);
        if g != 1 {
            return Err(Error::InvalidWeights(format!(
                "gcd of {weights:?} is {g}, not 1"
            )));
        }
        Ok(WeightVector(weights))
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

    pub fn max(&self) -> u64 {
        *self.0.iter().max().expect("nonempty")
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Weights reordered so that entry `i` is `self[order[i]]`.
    pub fn permuted(&self, order: &[usize]) -> WeightVector {
        WeightVector(order.iter().map(|&i| self.0[i]).collect())
    }
}

impl TryFrom<Vec<u64>> for WeightVector {
    type Error = Error;

    fn try_from(value: Vec<u64>) -> Result<Self> {
        WeightVector::new(value)
    }
}

impl From<WeightVector> for Vec<u64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Gaps, Frobenius number and a membership table for `Q = <w_1, ..., w_s>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupData {
    weights: WeightVector,
    gaps: Vec<u64>,
    frobenius: i64,
    table: Vec<bool>,
}

impl SemigroupData {
    pub fn new(weights: &WeightVector) -> SemigroupData {
        let w = weights.as_slice();
        let max_w = weights.max() as usize;
        let mut table = vec![true];
        let mut run = 1;
        while run < max_w {
            let d = table.len();
            let member = w
                .iter()
                .any(|&wi| wi as usize <= d && table[d - wi as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let gaps: Vec<u64> = (0..table.len() as u64)
            .filter(|&d| !table[d as usize])
            .collect();
        let frobenius = gaps.last().map_or(-1, |&g| g as i64);
        // cover [0, frobenius + max(w)]
        let wanted = (frobenius + 1) as usize + max_w;
        while table.len() < wanted {
            table.push(true);
        }
        SemigroupData {
            weights: weights.clone(),
            gaps,
            frobenius,
            table,
        }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Largest gap, or -1 when every natural number is a member.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Membership `d ∈ Q`.
    pub fn contains(&self, d: i64) -> Result<bool> {
        if d < 0 {
            return Err(Error::NegativeInput(d));
        }
        Ok(self.table.get(d as usize).copied().unwrap_or(true))
    }

    /// Infallible membership for `d >= 0`.
    pub fn chi(&self, d: u64) -> bool {
        self.table.get(d as usize).copied().unwrap_or(true)
    }

    /// Number of `(a_1, ..., a_s) ∈ N^s` with `Σ a_i w_i = d`.
    pub fn factorization_count(&self, d: i64) -> Result<u64> {
        if d < 0 {
            return Err(Error::NegativeInput(d));
        }
        count_factorizations(self.weights.as_slice(), d as u64)
    }
}

fn count_factorizations(w: &[u64], d: u64) -> Result<u64> {
    match w {
        [] => Ok(u64::from(d == 0)),
        [last] => Ok(u64::from(d.is_multiple_of(*last))),
        [first, rest @ ..] => {
            let mut total: u64 = 0;
            for a in 0..=d / first {
                let sub = count_factorizations(rest, d - a * first)?;
                total = total.checked_add(sub).ok_or(Error::Overflow)?;
            }
            Ok(total)
        }
    }
}

/// Membership of `n` in the semigroup generated by `gens`, which may have a
/// common factor.
fn in_span(n: u64, gens: &[u64]) -> bool {
    let g = gcd_all(gens);
    if !n.is_multiple_of(g) {
        return false;
    }
    let scaled = WeightVector(gens.iter().map(|x| x / g).collect());
    SemigroupData::new(&scaled).chi(n / g)
}

fn require_pairs(w: &WeightVector) -> Result<()> {
    if w.len() < 2 {
        Err(Error::InvalidWeights(
            "at least two weights are required".into(),
        ))
    } else {
        Ok(())
    }
}

/// Herzog's condition `lcm(gcd(w_1..w_{i-1}), w_i) ∈ <w_1..w_{i-1}>` for every
/// `i = 2..s`, in the given order.
pub fn herzog_condition(w: &WeightVector) -> Result<bool> {
    require_pairs(w)?;
    let w = w.as_slice();
    Ok((1..w.len()).all(|i| {
        let prefix = &w[..i];
        in_span(lcm(gcd_all(prefix), w[i]), prefix)
    }))
}

/// The first ordering (as indices into `w`, in lexicographic order of
/// permutations) satisfying [`herzog_condition`].
pub fn herzog_condition_any_order(w: &WeightVector) -> Result<Option<Vec<usize>>> {
    require_pairs(w)?;
    if w.len() > 8 {
        return Err(Error::TooManyWeights(w.len()));
    }
    for order in (0..w.len()).permutations(w.len()) {
        if herzog_condition(&w.permuted(&order))? {
            return Ok(Some(order));
        }
    }
    Ok(None)
}

/// One generator `t_var^c - Π_{j<var} t_j^{r_j}` of a complete-intersection
/// presentation. `var` is the 0-based variable index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HerzogGenerator {
    pub var: usize,
    pub c: u64,
    pub r: Vec<u64>,
}

impl HerzogGenerator {
    pub fn to_binomial(&self, s: usize) -> Binomial {
        let mut a = vec![0; s];
        a[self.var] = self.c;
        let mut b = vec![0; s];
        b[..self.r.len()].copy_from_slice(&self.r);
        Binomial::new(ExponentVector::new(a), ExponentVector::new(b))
            .expect("c >= 1 makes the two monomials differ")
    }
}

/// Lexicographically smallest `r ∈ N^len(gens)` with `Σ r_j gens_j = target`.
fn smallest_representation(target: u64, gens: &[u64]) -> Option<Vec<u64>> {
    match gens {
        [] => (target == 0).then(Vec::new),
        [last] => target.is_multiple_of(*last).then(|| vec![target / last]),
        [first, rest @ ..] => (0..=target / first).find_map(|r| {
            smallest_representation(target - r * first, rest).map(|mut tail| {
                tail.insert(0, r);
                tail
            })
        }),
    }
}

pub fn herzog_generators(w: &WeightVector) -> Result<Vec<HerzogGenerator>> {
    if !herzog_condition(w)? {
        return Err(Error::ConditionNotSatisfied);
    }
    let w = w.as_slice();
    (1..w.len())
        .map(|i| {
            let prefix = &w[..i];
            let c = gcd_all(prefix) / gcd_all(&w[..=i]);
            let r =
                smallest_representation(c * w[i], prefix).ok_or(Error::ConditionNotSatisfied)?;
            let rhs: u64 = r.iter().zip(prefix).map(|(r, w)| r * w).sum();
            assert_eq!(c * w[i], rhs, "generator does not balance");
            Ok(HerzogGenerator { var: i, c, r })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(w: &[u64]) -> WeightVector {
        WeightVector::new(w.to_vec()).unwrap()
    }

    #[test]
    fn weight_validation() {
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::new(vec![0, 1]).is_err());
        assert!(WeightVector::new(vec![2, 4]).is_err());
        assert!(WeightVector::new(vec![20, 30, 22, 44]).is_err());
        assert!(WeightVector::new(vec![1]).is_ok());
        let json: std::result::Result<WeightVector, _> = serde_json::from_str("[4,6]");
        assert!(json.is_err());
    }

    #[test]
    fn small_semigroups() {
        let s = SemigroupData::new(&wv(&[2, 3]));
        assert_eq!((s.gaps(), s.frobenius()), (&[1][..], 1));
        let s = SemigroupData::new(&wv(&[3, 4, 5]));
        assert_eq!((s.gaps(), s.frobenius()), (&[1, 2][..], 2));
        let s = SemigroupData::new(&wv(&[1, 7]));
        assert_eq!((s.gaps(), s.frobenius()), (&[][..], -1));
        let s = SemigroupData::new(&wv(&[3, 4]));
        assert_eq!(s.gaps(), &[1, 2, 5]);
    }

    #[test]
    fn membership() {
        let s = SemigroupData::new(&wv(&[2, 3]));
        assert_eq!(s.contains(0), Ok(true));
        assert_eq!(s.contains(1), Ok(false));
        assert_eq!(s.contains(7), Ok(true));
        assert_eq!(s.contains(1000), Ok(true));
        assert_eq!(s.contains(-1), Err(Error::NegativeInput(-1)));
    }

    #[test]
    fn factorizations() {
        let s = SemigroupData::new(&wv(&[2, 3]));
        assert_eq!(s.factorization_count(0), Ok(1));
        assert_eq!(s.factorization_count(6), Ok(2));
        assert_eq!(s.factorization_count(1), Ok(0));
        assert_eq!(s.factorization_count(-2), Err(Error::NegativeInput(-2)));
    }

    #[test]
    fn herzog_examples() {
        assert_eq!(herzog_condition(&wv(&[3, 4, 5])), Ok(false));
        assert_eq!(herzog_condition(&wv(&[7, 11])), Ok(true));
        assert_eq!(herzog_condition(&wv(&[1, 6, 10, 15])), Ok(true));
        assert_eq!(herzog_condition_any_order(&wv(&[3, 4, 5])), Ok(None));
        assert_eq!(
            herzog_condition_any_order(&wv(&[2, 3])),
            Ok(Some(vec![0, 1]))
        );
        assert_eq!(
            herzog_condition_any_order(&wv(&[1, 1, 1])),
            Ok(Some(vec![0, 1, 2]))
        );
        assert!(herzog_condition(&wv(&[1])).is_err());
        let nine = wv(&[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(
            herzog_condition_any_order(&nine),
            Err(Error::TooManyWeights(9))
        );
    }

    #[test]
    fn herzog_generator_examples() {
        let g = |w: &[u64]| herzog_generators(&wv(w)).unwrap();
        assert_eq!(
            g(&[2, 3]),
            vec![HerzogGenerator {
                var: 1,
                c: 2,
                r: vec![3]
            }]
        );
        assert_eq!(
            g(&[1, 1]),
            vec![HerzogGenerator {
                var: 1,
                c: 1,
                r: vec![1]
            }]
        );
        assert_eq!(
            g(&[3, 4]),
            vec![HerzogGenerator {
                var: 1,
                c: 3,
                r: vec![4]
            }]
        );
        assert_eq!(
            herzog_generators(&wv(&[3, 4, 5])),
            Err(Error::ConditionNotSatisfied)
        );
        // c_3 = gcd(6,10)/gcd(6,10,15) = 2, 2*15 = 30 = 0*6 + 3*10 is lex smallest
        let gens = g(&[6, 10, 15]);
        assert_eq!(
            gens[0],
            HerzogGenerator {
                var: 1,
                c: 3,
                r: vec![5]
            }
        );
        assert_eq!(
            gens[1],
            HerzogGenerator {
                var: 2,
                c: 2,
                r: vec![0, 3]
            }
        );
    }
}
