//! Weighted projective Reed-Muller codes `C_T(d)`: construction, exact
//! parameters, and the closed forms for the one-dimensional torus
//! `T(w_1, w_2)`.

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::binomial::ExponentVector;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::guard;
use crate::linalg::{self, Matrix};
use crate::par::{self, Execution};
use crate::semigroup::{SemigroupData, WeightVector};
use crate::torus::{monomials_of_degree, torus_points, TorusPoint};

/// The image of the degree-`d` evaluation map. Row `i` of `matrix` is the
/// evaluation of `monomials[i]` at the chosen representatives.
#[derive(Clone, Debug)]
pub struct EvaluationCode {
    pub field: Field,
    pub weights: WeightVector,
    pub degree: u64,
    pub points: Vec<Vec<FieldElement>>,
    pub monomials: Vec<ExponentVector>,
    pub matrix: Matrix,
}

impl EvaluationCode {
    /// Length `m`.
    pub fn length(&self) -> usize {
        self.points.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParameters {
    pub length: u64,
    pub dimension: u64,
    pub min_distance: Option<u64>,
    pub mds: Option<bool>,
}

/// Builds `C_T(d)` at the canonical representatives of `T(w)`.
pub fn build_code(field: &Field, w: &WeightVector, d: i64) -> Result<EvaluationCode> {
    let points = torus_points(field, w)?
        .into_iter()
        .map(|p: TorusPoint| p.coords().to_vec())
        .collect();
    build_code_at(field, w, d, points)
}

/// Builds the evaluation code at arbitrary coordinate representatives.
pub fn build_code_at(
    field: &Field,
    w: &WeightVector,
    d: i64,
    points: Vec<Vec<FieldElement>>,
) -> Result<EvaluationCode> {
    let monomials = monomials_of_degree(d, w)?;
    for p in &points {
        if p.len() != w.len() {
            return Err(Error::LengthMismatch {
                expected: w.len(),
                found: p.len(),
            });
        }
    }
    let matrix = monomials
        .iter()
        .map(|e| {
            points
                .iter()
                .map(|p| {
                    p.iter()
                        .zip(e.as_slice())
                        .try_fold(field.one(), |acc, (&x, &k)| {
                            Ok(field.mul(acc, field.pow(x, k as i64)?))
                        })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Matrix>>()?;
    Ok(EvaluationCode {
        field: field.clone(),
        weights: w.clone(),
        degree: d as u64,
        points,
        monomials,
        matrix,
    })
}

pub fn dimension(code: &EvaluationCode) -> usize {
    linalg::rank(&code.field, &code.matrix)
}

pub fn minimum_distance_bruteforce(code: &EvaluationCode) -> Result<Option<u64>> {
    minimum_distance_bruteforce_with(code, Execution::default())
}

/// Minimum Hamming weight over all nonzero codewords, or `None` for the zero
/// code.
///
/// Codewords are enumerated as combinations of a reduced row basis whose
/// first nonzero coefficient is 1; scalar multiples share a weight. Tasks are
/// split on the leading position and the next coefficient.
pub fn minimum_distance_bruteforce_with(
    code: &EvaluationCode,
    exec: Execution,
) -> Result<Option<u64>> {
    let field = &code.field;
    let basis = linalg::row_reduce(field, &code.matrix).rows;
    let k = basis.len();
    if k == 0 {
        return Ok(None);
    }
    guard::check(
        guard::pow_u128(field.q(), k as u64),
        guard::codeword_limit(),
    )?;

    // scaled[i][c] = c * basis[i]
    let scaled: Vec<Vec<Vec<FieldElement>>> = basis
        .iter()
        .map(|row| {
            field
                .elements()
                .map(|c| row.iter().map(|&x| field.mul(c, x)).collect())
                .collect()
        })
        .collect();

    let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            tasks.extend((0..field.q() as usize).map(|c| (lead, Some(c))));
        } else {
            tasks.push((lead, None));
        }
    }

    Ok(par::min_over(exec, &tasks, |&(lead, next)| {
        let mut start = basis[lead].clone();
        let mut depth = lead + 1;
        if let Some(c) = next {
            add_into(field, &mut start, &scaled[depth][c]);
            depth += 1;
        }
        Some(min_weight_below(field, &scaled, depth, start))
    }))
}

fn add_into(field: &Field, acc: &mut [FieldElement], row: &[FieldElement]) {
    for (x, &y) in acc.iter_mut().zip(row) {
        *x = field.add(*x, y);
    }
}

/// Minimum weight of `partial + Σ_{i >= depth} c_i basis[i]` over all `c`.
fn min_weight_below(
    field: &Field,
    scaled: &[Vec<Vec<FieldElement>>],
    depth: usize,
    partial: Vec<FieldElement>,
) -> u64 {
    let k = scaled.len();
    let mut stack = vec![partial];
    stack.resize(k - depth + 1, Vec::new());
    let mut best = u64::MAX;
    descend(field, scaled, depth, 0, &mut stack, &mut best);
    best
}

fn descend(
    field: &Field,
    scaled: &[Vec<Vec<FieldElement>>],
    depth: usize,
    level: usize,
    stack: &mut [Vec<FieldElement>],
    best: &mut u64,
) {
    if depth == scaled.len() {
        let weight = stack[level].iter().filter(|x| !x.is_zero()).count() as u64;
        *best = (*best).min(weight);
        return;
    }
    for multiple in &scaled[depth] {
        let (done, rest) = stack.split_at_mut(level + 1);
        let next = &mut rest[0];
        next.clear();
        next.extend(
            done[level]
                .iter()
                .zip(multiple)
                .map(|(&x, &y)| field.add(x, y)),
        );
        descend(field, scaled, depth + 1, level + 1, stack, best);
    }
}

/// `(m, k, δ)` by brute force, with the MDS verdict for nonzero codes.
pub fn code_parameters(code: &EvaluationCode) -> Result<CodeParameters> {
    code_parameters_with(code, Execution::default())
}

pub fn code_parameters_with(code: &EvaluationCode, exec: Execution) -> Result<CodeParameters> {
    let length = code.length() as u64;
    let dimension = dimension(code) as u64;
    let min_distance = minimum_distance_bruteforce_with(code, exec)?;
    let mut params = CodeParameters {
        length,
        dimension,
        min_distance,
        mds: None,
    };
    if let Some(delta) = min_distance {
        assert!(delta <= length - dimension + 1, "Singleton bound violated");
        params.mds = Some(is_mds(&params)?);
    }
    Ok(params)
}

/// Singleton equality `δ = m - k + 1`.
pub fn is_mds(params: &CodeParameters) -> Result<bool> {
    match params.min_distance {
        Some(delta) if params.dimension > 0 => Ok(delta + params.dimension == params.length + 1),
        _ => Err(Error::ZeroCode),
    }
}

/// Generator matrix `(I_k | A)` of the code after the recorded column
/// permutation: column `j` of `matrix` is column `permutation[j]` of the
/// reduced evaluation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub matrix: Matrix,
    pub permutation: Vec<usize>,
}

pub fn standard_form(code: &EvaluationCode) -> Result<StandardForm> {
    let ech = linalg::row_reduce(&code.field, &code.matrix);
    if ech.rank() == 0 {
        return Err(Error::ZeroCode);
    }
    let m = code.length();
    let mut permutation = ech.pivots.clone();
    permutation.extend((0..m).filter(|c| !ech.pivots.contains(c)));
    let matrix = ech
        .rows
        .iter()
        .map(|row| permutation.iter().map(|&c| row[c]).collect())
        .collect();
    Ok(StandardForm {
        matrix,
        permutation,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: u64,
    pub dimension: u64,
    pub min_distance: Option<u64>,
}

/// `(d, dim, δ)` for `d = 0..=d_max`.
pub fn parameter_table(field: &Field, w: &WeightVector, d_max: u64) -> Result<Vec<TableRow>> {
    parameter_table_with(field, w, d_max, Execution::default())
}

pub fn parameter_table_with(
    field: &Field,
    w: &WeightVector,
    d_max: u64,
    exec: Execution,
) -> Result<Vec<TableRow>> {
    let points: Vec<Vec<FieldElement>> = torus_points(field, w)?
        .into_iter()
        .map(|p| p.coords().to_vec())
        .collect();
    (0..=d_max)
        .map(|d| {
            let code = build_code_at(field, w, d as i64, points.clone())?;
            Ok(TableRow {
                d,
                dimension: dimension(&code) as u64,
                min_distance: minimum_distance_bruteforce_with(&code, exec)?,
            })
        })
        .collect()
}

/// `d = k w_1 w_2 + l` split for the one-dimensional torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Split {
    k: u64,
    chi: u64,
}

fn split_1d(q: u64, w1: u64, w2: u64, d: i64, check_range: bool) -> Result<Split> {
    if w1 == 0 || w2 == 0 || gcd(w1, w2) != 1 {
        return Err(Error::NotCoprime(w1, w2));
    }
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    if d < 0 {
        return Err(Error::NegativeDegree(d));
    }
    let upper = (w1 * w2 * (q - 1)) as i64 - w1 as i64 - w2 as i64;
    if check_range && d > upper {
        return Err(Error::OutOfRange(format!(
            "d = {d} exceeds w1*w2*(q-1) - w1 - w2 = {upper}"
        )));
    }
    let sg = SemigroupData::new(&WeightVector::new(vec![w1, w2])?);
    let d = d as u64;
    let (k, l) = (d / (w1 * w2), d % (w1 * w2));
    Ok(Split {
        k,
        chi: u64::from(sg.chi(l)),
    })
}

fn in_semigroup(w1: u64, w2: u64, d: i64) -> Result<bool> {
    SemigroupData::new(&WeightVector::new(vec![w1, w2])?).contains(d)
}

/// `dim C_T(d) = k + χ(l)` on `T(w_1, w_2)`.
pub fn dimension_formula_1d(q: u64, w1: u64, w2: u64, d: i64) -> Result<u64> {
    let s = split_1d(q, w1, w2, d, true)?;
    Ok(s.k + s.chi)
}

/// Upper bound `k - 1 + χ(l)` on the zeros of a nonzero degree-`d` form on
/// `T(w_1, w_2)`. Negative exactly when there are no degree-`d` forms.
pub fn max_zeros_bound_1d(q: u64, w1: u64, w2: u64, d: i64) -> Result<i64> {
    let s = split_1d(q, w1, w2, d, true)?;
    Ok(s.k as i64 - 1 + s.chi as i64)
}

/// `δ_T(d) = (q-1) - k + 1 - χ(l)` for `d ∈ Q` in range.
pub fn distance_formula_1d(q: u64, w1: u64, w2: u64, d: i64) -> Result<u64> {
    let value = distance_formula_1d_extended(q, w1, w2, d)?;
    if !value.within_stated_range {
        return Err(Error::OutOfRange(format!(
            "d = {d} exceeds w1*w2*(q-1) - w1 - w2"
        )));
    }
    Ok(value.value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: u64,
    /// `false` when `d > w1*w2*(q-1) - w1 - w2`, where the formula is not
    /// guaranteed.
    pub within_stated_range: bool,
}

/// [`distance_formula_1d`] evaluated past the guaranteed range, with a flag.
/// Fails when the expression is no longer positive.
pub fn distance_formula_1d_extended(q: u64, w1: u64, w2: u64, d: i64) -> Result<FormulaValue> {
    let s = split_1d(q, w1, w2, d, false)?;
    if !in_semigroup(w1, w2, d)? {
        return Err(Error::ZeroCode);
    }
    let upper = (w1 * w2 * (q - 1)) as i64 - w1 as i64 - w2 as i64;
    let value = (q as i64 - 1) - s.k as i64 + 1 - s.chi as i64;
    if value < 1 {
        return Err(Error::OutOfRange(format!(
            "formula gives {value} at d = {d}"
        )));
    }
    Ok(FormulaValue {
        value: value as u64,
        within_stated_range: d <= upper,
    })
}
