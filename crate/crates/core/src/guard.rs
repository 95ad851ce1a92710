//! Enumeration guards. `WPRM_GUARD_LIMIT` overrides every limit at once.

use crate::error::{Error, Result};

pub const GUARD_ENV: &str = "WPRM_GUARD_LIMIT";

/// Default cap on enumerated points, e.g. `(q-1)^s` for the affine torus.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Default cap on `q^k` for exhaustive codeword search.
pub const CODEWORD_LIMIT: u64 = 100_000_000;

fn env_override() -> Option<u64> {
    std::env::var(GUARD_ENV).ok()?.trim().parse().ok()
}

pub fn enumeration_limit() -> u64 {
    env_override().unwrap_or(ENUMERATION_LIMIT)
}

pub fn codeword_limit() -> u64 {
    env_override().unwrap_or(CODEWORD_LIMIT)
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_u128(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

pub(crate) fn check(needed: u128, limit: u64) -> Result<()> {
    if needed > limit as u128 {
        Err(Error::TooLarge { needed, limit })
    } else {
        Ok(())
    }
}
