//! Sequential and rayon-backed execution of the brute-force loops.
//!
//! Every reduction here is order independent (`all`, `min`), so results do
//! not depend on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Configures the global rayon pool. A no-op without the `parallel` feature.
pub fn set_threads(threads: usize) -> Result<()> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::Config(e.to_string()))
    }
    #[cfg(not(feature = "parallel"))]
    {
        if threads == 0 {
            return Err(Error::Config("thread count must be positive".into()));
        }
        Ok(())
    }
}

pub(crate) fn all_indices<F>(exec: Execution, n: u64, f: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..n).all(f),
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n).into_par_iter().all(f),
    }
}

pub(crate) fn min_over<T, F>(exec: Execution, items: &[T], f: F) -> Option<u64>
where
    T: Sync,
    F: Fn(&T) -> Option<u64> + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().filter_map(f).min(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().filter_map(f).min(),
    }
}
