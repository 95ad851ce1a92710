//! Closed forms and identities checked against brute force over a grid of
//! `(q, w)`.

use std::collections::HashSet;
use std::io::Write;

use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use wprm::arith::gcd;
use wprm::code::{
    build_code_at, code_parameters, dimension, dimension_formula_1d, distance_formula_1d, is_mds,
};
use wprm::{
    hilbert_function, in_defining_lattice, in_vanishing_ideal, lemma_point, orbit_of,
    torus_hilbert_series, torus_points, vanishes_on_affine_torus, Binomial, Error, Field,
    SemigroupData, WeightVector,
};

use crate::{Failure, Format, EXIT_DISCREPANCY, EXIT_OK};

const MAX_LISTED: usize = 10;
const LATTICE_POINT_LIMIT: u64 = 100_000;

#[derive(Debug, Args, Clone)]
pub struct CheckOptions {
    /// Largest weight in the sampled pairs (w1, w2).
    #[arg(long, default_value_t = 6)]
    pub budget: u64,

    /// Field orders to sample.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 4, 5, 7])]
    pub fields: Vec<u64>,

    /// Random binomials per (q, w) for the lattice identity.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,

    /// Seed for the binomial sampler.
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: 6,
            fields: vec![2, 3, 4, 5, 7],
            samples: 10_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FamilyReport {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub discrepancies: Vec<String>,
}

impl FamilyReport {
    fn new(name: &'static str) -> Self {
        FamilyReport {
            name,
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.discrepancies.len() < MAX_LISTED {
                self.discrepancies.push(describe());
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub grid: Vec<(u64, Vec<u64>)>,
    pub families: Vec<FamilyReport>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.failed == 0)
    }

    pub fn family(&self, name: &str) -> Option<&FamilyReport> {
        self.families.iter().find(|f| f.name == name)
    }
}

/// Every `q` in `fields` with every coprime `1 <= w1 <= w2 <= budget`, plus
/// `(3, 4, 5)`.
pub fn grid(opts: &CheckOptions) -> Vec<(u64, Vec<u64>)> {
    let mut out = Vec::new();
    for &q in &opts.fields {
        for w1 in 1..=opts.budget {
            for w2 in w1..=opts.budget {
                if gcd(w1, w2) == 1 {
                    out.push((q, vec![w1, w2]));
                }
            }
        }
        out.push((q, vec![3, 4, 5]));
    }
    out
}

pub fn run_suite(opts: &CheckOptions) -> Result<CheckReport, Error> {
    let grid = grid(opts);
    let mut closed = FamilyReport::new("closed-forms");
    let mut coeff = FamilyReport::new("hilbert-rank");
    let mut lattice = FamilyReport::new("lattice");
    let mut length = FamilyReport::new("torus-length");
    let mut lemma = FamilyReport::new("lemma-points");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    for (q, w) in &grid {
        let field = Field::new(*q)?;
        let wv = WeightVector::new(w.clone())?;
        let points: Vec<_> = torus_points(&field, &wv)?
            .iter()
            .map(|p| p.coords().to_vec())
            .collect();

        check_length(&mut length, &field, &wv, &points)?;
        check_hilbert_rank(&mut coeff, &field, &wv, &points)?;
        if w.len() == 2 {
            check_closed_forms(&mut closed, &field, w[0], w[1], &points)?;
            check_lemma(&mut lemma, &field, w[0], w[1])?;
        }
        if (q - 1).pow(w.len() as u32) <= LATTICE_POINT_LIMIT {
            check_lattice(&mut lattice, &field, &wv, opts.samples, &mut rng)?;
        }
    }
    Ok(CheckReport {
        grid,
        families: vec![closed, coeff, lattice, length, lemma],
    })
}

fn check_length(
    report: &mut FamilyReport,
    field: &Field,
    w: &WeightVector,
    points: &[Vec<wprm::FieldElement>],
) -> Result<(), Error> {
    let q = field.q();
    let m = (q - 1).pow(w.len() as u32 - 1);
    report.record(points.len() as u64 == m, || {
        format!("q={q} w={w}: {} points, expected {m}", points.len())
    });
    let mut union = HashSet::new();
    let mut total = 0;
    for p in points {
        for member in orbit_of(p, field, w)? {
            total += 1;
            union.insert(member);
        }
    }
    let full = (q - 1).pow(w.len() as u32);
    report.record(total == full && union.len() as u64 == full, || {
        format!(
            "q={q} w={w}: orbits cover {} of {full} tuples ({total} with repeats)",
            union.len()
        )
    });
    Ok(())
}

fn check_hilbert_rank(
    report: &mut FamilyReport,
    field: &Field,
    w: &WeightVector,
    points: &[Vec<wprm::FieldElement>],
) -> Result<(), Error> {
    let q = field.q();
    let hs = torus_hilbert_series(q, w)?;
    let top = hs.regularity() + w.max() as i64;
    for d in 0..=top.max(0) {
        let code = build_code_at(field, w, d, points.to_vec())?;
        let rank = dimension(&code) as u64;
        let phi = hilbert_function(&hs, d)?;
        report.record(rank == phi, || {
            format!("q={q} w={w} d={d}: rank {rank}, series {phi}")
        });
    }
    Ok(())
}

fn check_closed_forms(
    report: &mut FamilyReport,
    field: &Field,
    w1: u64,
    w2: u64,
    points: &[Vec<wprm::FieldElement>],
) -> Result<(), Error> {
    let q = field.q();
    let upper = (w1 * w2 * (q - 1)) as i64 - w1 as i64 - w2 as i64;
    let w = WeightVector::new(vec![w1, w2])?;
    let sg = SemigroupData::new(&w);
    for d in 0..=upper {
        let code = build_code_at(field, &w, d, points.to_vec())?;
        let params = code_parameters(&code)?;
        let dim = dimension_formula_1d(q, w1, w2, d)?;
        report.record(dim == params.dimension, || {
            format!(
                "q={q} w=({w1},{w2}) d={d}: dim formula {dim}, rank {}",
                params.dimension
            )
        });
        if sg.contains(d)? {
            let delta = distance_formula_1d(q, w1, w2, d)?;
            report.record(Some(delta) == params.min_distance, || {
                format!(
                    "q={q} w=({w1},{w2}) d={d}: distance formula {delta}, brute {:?}",
                    params.min_distance
                )
            });
            let mds = is_mds(&params)?;
            report.record(mds, || format!("q={q} w=({w1},{w2}) d={d}: not MDS"));
        }
    }
    Ok(())
}

/// `t_1^{w2} - alpha^r t_2^{w1}` has exactly one zero on the torus.
fn check_lemma(report: &mut FamilyReport, field: &Field, w1: u64, w2: u64) -> Result<(), Error> {
    let q = field.q();
    let w = WeightVector::new(vec![w1, w2])?;
    let points = torus_points(field, &w)?;
    let mut found = HashSet::new();
    for r in 0..q as i64 - 1 {
        let expected = lemma_point(field, w1, w2, r)?;
        let coeff = field.alpha_pow(r);
        let zeros: Vec<_> = points
            .iter()
            .filter(|p| {
                let x = p.coords();
                let lhs = field.pow(x[0], w2 as i64).expect("nonzero");
                let rhs = field.mul(coeff, field.pow(x[1], w1 as i64).expect("nonzero"));
                lhs == rhs
            })
            .collect();
        report.record(zeros.len() == 1 && *zeros[0] == expected, || {
            format!(
                "q={q} w=({w1},{w2}) r={r}: {} zeros, expected {expected}",
                zeros.len()
            )
        });
        found.insert(expected);
    }
    report.record(found.len() == points.len(), || {
        format!(
            "q={q} w=({w1},{w2}): lemma points cover {} of {}",
            found.len(),
            points.len()
        )
    });
    Ok(())
}

/// Random element of `w^⊥ ∩ Z^s` built from the pair relations
/// `(w_j e_i - w_i e_j) / gcd(w_i, w_j)`.
fn random_perp(w: &[u64], rng: &mut ChaCha8Rng) -> Vec<i64> {
    let s = w.len();
    let mut v = vec![0i64; s];
    for _ in 0..rng.random_range(1..=2) {
        let i = rng.random_range(0..s);
        let j = rng.random_range(0..s);
        if i == j {
            continue;
        }
        let g = gcd(w[i], w[j]) as i64;
        let c = rng.random_range(-2i64..=2);
        v[i] += c * w[j] as i64 / g;
        v[j] -= c * w[i] as i64 / g;
    }
    v
}

/// Binomial with `a - b = diff`, shifted by a common random offset.
fn binomial_with_difference(
    diff: &[i64],
    offset_bound: u64,
    rng: &mut ChaCha8Rng,
) -> Option<Binomial> {
    if diff.iter().all(|&x| x == 0) {
        return None;
    }
    let offset: Vec<u64> = diff
        .iter()
        .map(|_| rng.random_range(0..=offset_bound))
        .collect();
    let a: Vec<u64> = diff
        .iter()
        .zip(&offset)
        .map(|(&x, &o)| x.max(0) as u64 + o)
        .collect();
    let b: Vec<u64> = diff
        .iter()
        .zip(&offset)
        .map(|(&x, &o)| (-x).max(0) as u64 + o)
        .collect();
    Binomial::from_slices(&a, &b).ok()
}

/// Draws from three generators in turn: uniform exponents, elements of the
/// defining lattice, and homogeneous binomials scaled off the lattice.
pub fn sample_binomial(q: u64, w: &[u64], kind: usize, rng: &mut ChaCha8Rng) -> Option<Binomial> {
    let unit = q - 1;
    let bound = 2 * unit * w.iter().max().copied().unwrap_or(1);
    match kind % 3 {
        0 => {
            let a: Vec<u64> = w.iter().map(|_| rng.random_range(0..=bound)).collect();
            let b: Vec<u64> = w.iter().map(|_| rng.random_range(0..=bound)).collect();
            Binomial::from_slices(&a, &b).ok()
        }
        1 => {
            let diff: Vec<i64> = random_perp(w, rng)
                .iter()
                .map(|x| x * unit as i64)
                .collect();
            binomial_with_difference(&diff, unit, rng)
        }
        _ => {
            let m = rng.random_range(1..=2 * unit) as i64;
            let diff: Vec<i64> = random_perp(w, rng).iter().map(|x| x * m).collect();
            binomial_with_difference(&diff, unit, rng)
        }
    }
}

fn check_lattice(
    report: &mut FamilyReport,
    field: &Field,
    w: &WeightVector,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(), Error> {
    let q = field.q();
    let mut drawn = 0;
    let mut kind = 0;
    while drawn < samples {
        kind += 1;
        let Some(bin) = sample_binomial(q, w.as_slice(), kind, rng) else {
            continue;
        };
        drawn += 1;
        let ideal = in_vanishing_ideal(&bin, field, w)?;
        let lattice = in_defining_lattice(&bin, q, w)?;
        report.record(ideal == lattice, || {
            format!("q={q} w={w} {bin}: vanishing ideal {ideal}, lattice {lattice}")
        });
        let affine = vanishes_on_affine_torus(&bin, field, w)?;
        let congruent = bin
            .difference()
            .iter()
            .all(|x| x.rem_euclid(q as i64 - 1) == 0);
        report.record(affine == congruent, || {
            format!("q={q} w={w} {bin}: affine vanishing {affine}, congruence {congruent}")
        });
    }
    Ok(())
}

pub(crate) fn run(
    opts: &CheckOptions,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if opts.budget == 0 || opts.fields.is_empty() {
        return Err(
            Error::Config("check needs --budget >= 1 and at least one field".into()).into(),
        );
    }
    let report = run_suite(opts)?;
    match format {
        Format::Pretty => {
            writeln!(out, "{} (q, w) instances", report.grid.len())?;
            writeln!(out, "{:<14} {:>9} {:>7}", "family", "checked", "failed")?;
            for f in &report.families {
                writeln!(out, "{:<14} {:>9} {:>7}", f.name, f.checked, f.failed)?;
                for d in &f.discrepancies {
                    writeln!(out, "  {d}")?;
                }
            }
            let verdict = if report.passed() {
                "all checks passed"
            } else {
                "DISCREPANCIES FOUND"
            };
            writeln!(out, "{verdict}")?;
        }
        Format::Csv => {
            writeln!(out, "family,checked,failed")?;
            for f in &report.families {
                writeln!(out, "{},{},{}", f.name, f.checked, f.failed)?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    })
}
