//! Thread pool sizing. `GRADED_BASIC_THREADS` takes precedence over the
//! `--threads` flag; `0` leaves the choice to rayon.

use rayon::ThreadPool;

use crate::error::CliError;

pub const THREADS_ENV: &str = "GRADED_BASIC_THREADS";

pub fn resolve_threads(flag: usize) -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::input(THREADS_ENV, format!("not a thread count: {v:?}"))),
        Err(_) => Ok(flag),
    }
}

pub fn pool(threads: usize) -> Result<ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::input("--threads", e))
}
