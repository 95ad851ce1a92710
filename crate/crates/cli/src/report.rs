use std::io::Write;

use itertools::Itertools;
use serde::Serialize;

use wprm::code::{build_code, code_parameters, standard_form};
use wprm::hilbert::{index_of_regularity, torus_hilbert_series};
use wprm::semigroup::{herzog_condition, herzog_generators, SemigroupData};
use wprm::{parameter_table, torus_points, HerzogGenerator, TableRow, WeightVector};

use crate::{open_space, Failure, Format, Space, EXIT_OK};

type Outcome = Result<i32, Failure>;

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn dash_or<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

#[derive(Serialize)]
struct TableReport<'a> {
    q: u64,
    weights: &'a [u64],
    length: u64,
    rows: &'a [TableRow],
}

pub(crate) fn table(space: &Space, dmax: u64, format: Format, out: &mut dyn Write) -> Outcome {
    let (field, w) = open_space(space)?;
    let length = torus_points(&field, &w)?.len() as u64;
    let rows = parameter_table(&field, &w, dmax)?;
    match format {
        Format::Pretty => {
            writeln!(out, "q = {}, w = {w}, length {length}", space.q)?;
            writeln!(out, "{:>4} {:>5} {:>5}", "d", "dim", "delta")?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>4} {:>5} {:>5}",
                    r.d,
                    r.dimension,
                    dash_or(r.min_distance)
                )?;
            }
        }
        Format::Csv => {
            writeln!(out, "d,dim,delta")?;
            for r in &rows {
                writeln!(out, "{},{},{}", r.d, r.dimension, dash_or(r.min_distance))?;
            }
        }
        Format::Json => {
            let report = TableReport {
                q: space.q,
                weights: w.as_slice(),
                length,
                rows: &rows,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct HilbertReport {
    numerator: Vec<(u64, i64)>,
    denominator: Vec<u64>,
    q: Option<u64>,
    a_invariant: i64,
    regularity: i64,
    regularity_closed_form: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansion: Option<Vec<i64>>,
}

pub(crate) fn hilbert(
    space: &Space,
    expand: Option<usize>,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    let (_, w) = open_space(space)?;
    let hs = torus_hilbert_series(space.q, &w)?;
    let g = SemigroupData::new(&w).frobenius();
    let report = HilbertReport {
        numerator: hs.numerator.terms().collect(),
        denominator: hs.denominator.clone(),
        q: hs.q,
        a_invariant: hs.a_invariant(),
        regularity: hs.regularity(),
        regularity_closed_form: index_of_regularity(space.q, &w, g)?,
        expansion: expand.map(|n| hs.expand(n)),
    };
    let denominator: String = w
        .as_slice()
        .iter()
        .map(|wi| format!("(1 - t^{wi})"))
        .collect();
    match format {
        Format::Pretty => {
            writeln!(out, "q = {}, w = {w}", space.q)?;
            writeln!(out, "numerator:    {}", hs.numerator)?;
            writeln!(out, "denominator:  {denominator}")?;
            writeln!(out, "a-invariant:  {}", report.a_invariant)?;
            writeln!(out, "regularity:   {}", report.regularity)?;
            writeln!(out, "closed form:  {}", report.regularity_closed_form)?;
            if let Some(c) = &report.expansion {
                writeln!(out, "expansion:    {}", join(c, " "))?;
            }
        }
        Format::Csv => {
            writeln!(out, "key,value")?;
            writeln!(out, "numerator,{}", hs.numerator)?;
            writeln!(out, "denominator,{denominator}")?;
            writeln!(out, "a_invariant,{}", report.a_invariant)?;
            writeln!(out, "regularity,{}", report.regularity)?;
            writeln!(
                out,
                "regularity_closed_form,{}",
                report.regularity_closed_form
            )?;
            if let Some(c) = &report.expansion {
                writeln!(out, "expansion,{}", join(c, " "))?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Ordering {
    weights: Vec<u64>,
    satisfied: bool,
}

#[derive(Serialize)]
struct SemigroupReport {
    weights: Vec<u64>,
    gaps: Vec<u64>,
    frobenius: i64,
    orderings: Vec<Ordering>,
    generators: Option<Vec<HerzogGenerator>>,
}

pub(crate) fn semigroup(weights: &[u64], format: Format, out: &mut dyn Write) -> Outcome {
    let w = WeightVector::new(weights.to_vec())?;
    let sg = SemigroupData::new(&w);
    let orderings = if w.len() < 2 {
        Vec::new()
    } else {
        if w.len() > 8 {
            return Err(wprm::Error::TooManyWeights(w.len()).into());
        }
        w.as_slice()
            .iter()
            .copied()
            .permutations(w.len())
            .unique()
            .map(|order| {
                let permuted = WeightVector::new(order.clone())?;
                Ok(Ordering {
                    satisfied: herzog_condition(&permuted)?,
                    weights: order,
                })
            })
            .collect::<Result<Vec<_>, wprm::Error>>()?
    };
    let generators = match w.len() >= 2 && herzog_condition(&w)? {
        true => Some(herzog_generators(&w)?),
        false => None,
    };
    let report = SemigroupReport {
        weights: weights.to_vec(),
        gaps: sg.gaps().to_vec(),
        frobenius: sg.frobenius(),
        orderings,
        generators,
    };
    let s = w.len();
    let binomials = |gens: &[HerzogGenerator]| -> Vec<String> {
        gens.iter().map(|g| g.to_binomial(s).to_string()).collect()
    };
    match format {
        Format::Pretty => {
            writeln!(out, "w = {w}")?;
            writeln!(out, "gaps:       {{{}}}", join(&report.gaps, ", "))?;
            writeln!(out, "frobenius:  {}", report.frobenius)?;
            for o in &report.orderings {
                let verdict = if o.satisfied { "yes" } else { "no" };
                writeln!(out, "ordering ({}): {verdict}", join(&o.weights, ","))?;
            }
            if let Some(gens) = &report.generators {
                for b in binomials(gens) {
                    writeln!(out, "generator:  {b}")?;
                }
            }
        }
        Format::Csv => {
            writeln!(out, "key,value")?;
            writeln!(out, "gaps,{}", join(&report.gaps, " "))?;
            writeln!(out, "frobenius,{}", report.frobenius)?;
            for o in &report.orderings {
                writeln!(out, "ordering {},{}", join(&o.weights, " "), o.satisfied)?;
            }
            if let Some(gens) = &report.generators {
                for b in binomials(gens) {
                    writeln!(out, "generator,{b}")?;
                }
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GenmatReport {
    q: u64,
    weights: Vec<u64>,
    d: u64,
    length: u64,
    dimension: u64,
    min_distance: Option<u64>,
    permutation: Vec<usize>,
    matrix: Vec<Vec<String>>,
}

pub(crate) fn genmat(space: &Space, d: u64, format: Format, out: &mut dyn Write) -> Outcome {
    let (field, w) = open_space(space)?;
    let code = build_code(&field, &w, d as i64)?;
    let sf = standard_form(&code)?;
    let params = code_parameters(&code)?;
    let matrix: Vec<Vec<String>> = sf
        .matrix
        .iter()
        .map(|row| row.iter().map(|&x| field.format_power(x)).collect())
        .collect();
    let report = GenmatReport {
        q: space.q,
        weights: w.as_slice().to_vec(),
        d,
        length: params.length,
        dimension: params.dimension,
        min_distance: params.min_distance,
        permutation: sf.permutation,
        matrix,
    };
    match format {
        Format::Pretty => {
            writeln!(
                out,
                "q = {}, w = {w}, d = {d}: [{}, {}, {}]",
                space.q,
                report.length,
                report.dimension,
                dash_or(report.min_distance)
            )?;
            writeln!(out, "columns: {}", join(&report.permutation, " "))?;
            let width = report
                .matrix
                .iter()
                .flatten()
                .map(String::len)
                .max()
                .unwrap_or(1);
            for row in &report.matrix {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
        Format::Csv => {
            let header: Vec<String> = report.permutation.iter().map(|c| format!("c{c}")).collect();
            writeln!(out, "{}", header.join(","))?;
            for row in &report.matrix {
                writeln!(out, "{}", row.join(","))?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
    }
    Ok(EXIT_OK)
}
