//! Points of the weighted projective torus `T(w)` and graded monomial bases.
//!
//! Points are handled in log space: a point of `(K*)^s` is a tuple of
//! discrete logs in `Z/(q-1)`, and `λ = alpha^c` acts by adding `c·w`.
//! The canonical representative of an orbit is its lexicographically
//! smallest log tuple.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{ext_gcd, gcd};
use crate::binomial::ExponentVector;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::guard;
use crate::semigroup::WeightVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    coords: Vec<FieldElement>,
    log_coords: Vec<u32>,
}

impl TorusPoint {
    /// Canonical point of the orbit through `alpha^logs`.
    pub fn from_logs(field: &Field, w: &WeightVector, logs: &[i64]) -> Result<TorusPoint> {
        if logs.len() != w.len() {
            return Err(Error::LengthMismatch {
                expected: w.len(),
                found: logs.len(),
            });
        }
        let order = field.q() as i64 - 1;
        let reduced: Vec<u32> = logs.iter().map(|l| l.rem_euclid(order) as u32).collect();
        let log_coords = canonical_logs(&reduced, w, field.q());
        Ok(TorusPoint {
            coords: log_coords
                .iter()
                .map(|&l| field.alpha_pow(l as i64))
                .collect(),
            log_coords,
        })
    }

    /// Canonical point of the orbit through the given coordinates.
    pub fn from_coords(
        field: &Field,
        w: &WeightVector,
        coords: &[FieldElement],
    ) -> Result<TorusPoint> {
        let logs = coords
            .iter()
            .map(|&x| {
                field
                    .discrete_log(x)
                    .map(i64::from)
                    .map_err(|_| Error::ZeroCoordinate)
            })
            .collect::<Result<Vec<_>>>()?;
        TorusPoint::from_logs(field, w, &logs)
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn log_coords(&self) -> &[u32] {
        &self.log_coords
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.log_coords.iter().map(|l| format!("a^{l}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for TorusPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.log_coords.serialize(serializer)
    }
}

fn canonical_logs(logs: &[u32], w: &WeightVector, q: u64) -> Vec<u32> {
    let order = q - 1;
    (0..order)
        .map(|c| {
            logs.iter()
                .zip(w.as_slice())
                .map(|(&l, &wi)| ((l as u64 + c * wi) % order) as u32)
                .collect::<Vec<u32>>()
        })
        .min()
        .expect("q >= 2")
}

/// The `q - 1` tuples `λ·p` for `λ = alpha^c`, `c = 0..q-2`.
pub fn orbit_of(
    point: &[FieldElement],
    field: &Field,
    w: &WeightVector,
) -> Result<Vec<Vec<FieldElement>>> {
    if point.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            found: point.len(),
        });
    }
    if point.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroCoordinate);
    }
    Ok((0..field.q() as i64 - 1)
        .map(|c| {
            let lambda = field.alpha_pow(c);
            point
                .iter()
                .zip(w.as_slice())
                .map(|(&x, &wi)| field.mul(field.pow(lambda, wi as i64).expect("nonzero"), x))
                .collect()
        })
        .collect())
}

/// Canonical representatives of all points of `T(w)`, sorted by log tuple.
pub fn torus_points(field: &Field, w: &WeightVector) -> Result<Vec<TorusPoint>> {
    let s = w.len();
    let order = field.q() - 1;
    let total = guard::pow_u128(order, s as u64);
    guard::check(total, guard::enumeration_limit())?;
    let total = total as usize;

    // Tuples are indexed big-endian so index order is lexicographic order.
    let encode = |logs: &[u64]| {
        logs.iter()
            .fold(0usize, |acc, &l| acc * order as usize + l as usize)
    };
    let mut seen = vec![false; total];
    let mut points = Vec::with_capacity(total / order as usize);
    let mut logs = vec![0u64; s];
    for idx in 0..total {
        let mut rest = idx;
        for slot in logs.iter_mut().rev() {
            *slot = (rest % order as usize) as u64;
            rest /= order as usize;
        }
        if seen[idx] {
            continue;
        }
        for c in 0..order {
            let moved: Vec<u64> = logs
                .iter()
                .zip(w.as_slice())
                .map(|(&l, &wi)| (l + c * wi) % order)
                .collect();
            seen[encode(&moved)] = true;
        }
        let log_coords: Vec<u32> = logs.iter().map(|&l| l as u32).collect();
        points.push(TorusPoint {
            coords: log_coords
                .iter()
                .map(|&l| field.alpha_pow(l as i64))
                .collect(),
            log_coords,
        });
    }
    Ok(points)
}

/// The unique zero of `t_1^{w_2} - alpha^r t_2^{w_1}` on `T(w_1, w_2)`.
pub fn lemma_point(field: &Field, w1: u64, w2: u64, r: i64) -> Result<TorusPoint> {
    if w1 == 0 || w2 == 0 || gcd(w1, w2) != 1 {
        return Err(Error::NotCoprime(w1, w2));
    }
    let order = field.q() as i64 - 1;
    if !(0..order).contains(&r) {
        return Err(Error::OutOfRange(format!(
            "r = {r} outside [0, {}]",
            order - 1
        )));
    }
    let (_, a, b) = ext_gcd(w1 as i64, w2 as i64);
    let w = WeightVector::new(vec![w1, w2])?;
    TorusPoint::from_logs(field, &w, &[r * b, -r * a])
}

/// Every `e ∈ N^s` with `⟨e, w⟩ = d`, in increasing lexicographic order.
pub fn monomials_of_degree(d: i64, w: &WeightVector) -> Result<Vec<ExponentVector>> {
    if d < 0 {
        return Err(Error::NegativeDegree(d));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(w.len());
    collect_monomials(d as u64, w.as_slice(), &mut current, &mut out);
    Ok(out)
}

fn collect_monomials(rem: u64, w: &[u64], current: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
    match w {
        [] => {
            if rem == 0 {
                out.push(ExponentVector::new(current.clone()));
            }
        }
        [first, rest @ ..] => {
            for e in 0..=rem / first {
                current.push(e);
                collect_monomials(rem - e * first, rest, current, out);
                current.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(w: &[u64]) -> WeightVector {
        WeightVector::new(w.to_vec()).unwrap()
    }

    #[test]
    fn trivial_group_orbit() {
        let f = Field::new(2).unwrap();
        let orbit = orbit_of(&[f.one(), f.one()], &f, &wv(&[2, 3])).unwrap();
        assert_eq!(orbit, vec![vec![f.one(), f.one()]]);
    }

    #[test]
    fn scalar_orbit() {
        let f = Field::new(3).unwrap();
        let two = f.element(2).unwrap();
        let orbit = orbit_of(&[f.one(), f.one()], &f, &wv(&[1, 1])).unwrap();
        assert_eq!(orbit, vec![vec![f.one(), f.one()], vec![two, two]]);
        assert_eq!(
            orbit_of(&[f.zero(), f.one()], &f, &wv(&[1, 1])),
            Err(Error::ZeroCoordinate)
        );
    }

    #[test]
    fn point_counts() {
        let count = |q, w: &[u64]| torus_points(&Field::new(q).unwrap(), &wv(w)).unwrap().len();
        assert_eq!(count(4, &[3, 4, 5]), 9);
        assert_eq!(count(2, &[3, 4, 5]), 1);
        assert_eq!(count(5, &[2, 3]), 4);
    }

    #[test]
    fn lemma_points() {
        let f = Field::new(5).unwrap();
        let p = lemma_point(&f, 2, 3, 0).unwrap();
        assert_eq!(p.log_coords(), &[0, 0]);
        let p = lemma_point(&f, 2, 3, 1).unwrap();
        let expected = TorusPoint::from_coords(&f, &wv(&[2, 3]), &[f.alpha(), f.alpha()]).unwrap();
        assert_eq!(p, expected);
        assert_eq!(lemma_point(&f, 2, 4, 0), Err(Error::NotCoprime(2, 4)));
        assert!(lemma_point(&f, 2, 3, 4).is_err());
    }

    #[test]
    fn monomial_bases() {
        let w = wv(&[3, 4, 5]);
        assert_eq!(
            monomials_of_degree(0, &w).unwrap(),
            vec![ExponentVector::zero(3)]
        );
        assert_eq!(
            monomials_of_degree(8, &w).unwrap(),
            vec![
                ExponentVector::new(vec![0, 2, 0]),
                ExponentVector::new(vec![1, 0, 1])
            ]
        );
        assert!(monomials_of_degree(1, &wv(&[2, 3])).unwrap().is_empty());
        assert_eq!(monomials_of_degree(-1, &w), Err(Error::NegativeDegree(-1)));
    }

    #[test]
    fn display_and_json() {
        let f = Field::new(5).unwrap();
        let p = lemma_point(&f, 2, 3, 1).unwrap();
        assert_eq!(
            p.to_string(),
            format!("(a^{}, a^{})", p.log_coords()[0], p.log_coords()[1])
        );
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            format!("[{},{}]", p.log_coords()[0], p.log_coords()[1])
        );
    }
}
