//! Command-line front end: parameter tables, Hilbert series and semigroup
//! reports, standard-form generator matrices, and the `check` suite that
//! compares closed forms against brute force.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wprm::{Error, Field, WeightVector};

pub mod check;
mod report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Pretty,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "wprm",
    version,
    about = "Weighted projective Reed-Muller codes over finite fields"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,

    /// Worker threads for the exhaustive searches. Output does not depend
    /// on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args, Clone)]
pub struct Space {
    /// Field order, a prime power up to 65536.
    #[arg(long)]
    pub q: u64,

    /// Comma-separated positive weights with gcd 1.
    #[arg(long, value_delimiter = ',', required = true)]
    pub weights: Vec<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length, dimension and minimum distance of C(d) for d = 0..=dmax.
    Table {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        dmax: u64,
    },
    /// Hilbert series, a-invariant and index of regularity.
    Hilbert {
        #[command(flatten)]
        space: Space,
        /// Also print the first N+1 coefficients.
        #[arg(long)]
        expand: Option<usize>,
    },
    /// Gaps, Frobenius number and the complete-intersection condition per
    /// ordering.
    Semigroup {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
    },
    /// Generator matrix of C(d) in standard form.
    Genmat {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        d: u64,
    },
    /// Closed forms against brute force over a grid of (q, w).
    Check(check::CheckOptions),
}

/// A run that could not produce a report.
#[derive(Debug)]
pub enum Failure {
    Library(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

pub(crate) fn open_space(space: &Space) -> Result<(Field, WeightVector), Error> {
    let field = Field::new(space.q)?;
    let weights = WeightVector::new(space.weights.clone())?;
    Ok((field, weights))
}

/// Runs one command, writing the report to `out`, and returns the exit
/// status. Diagnostics go to standard error.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> i32 {
    if let Some(n) = config.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return EXIT_INVALID;
        }
        // A second call in the same process keeps the first pool.
        let _ = wprm::par::set_threads(n);
    }
    let outcome = match &config.command {
        Command::Table { space, dmax } => report::table(space, *dmax, config.format, out),
        Command::Hilbert { space, expand } => report::hilbert(space, *expand, config.format, out),
        Command::Semigroup { weights } => report::semigroup(weights, config.format, out),
        Command::Genmat { space, d } => report::genmat(space, *d, config.format, out),
        Command::Check(opts) => check::run(opts, config.format, out),
    };
    match outcome {
        Ok(status) => status,
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::TooLarge { .. } => EXIT_GUARD,
                _ => EXIT_INVALID,
            }
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    }
}
