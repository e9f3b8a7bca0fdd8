//! Data-parallel helpers with a sequential fallback.
//!
//! With the default `parallel` feature the hot loops (point counting,
//! exhaustive family sweeps) fan out over rayon; without it they run the
//! plain iterator pipeline.  The `_seq` variants are always sequential and
//! exist so the benchmark suite can compare both paths in one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sums `f(i)` for `i` in `0..n`.
#[cfg(feature = "parallel")]
pub fn sum_range<F>(n: u64, f: F) -> u64
where
    F: Fn(u64) -> u64 + Sync + Send,
{
    (0..n).into_par_iter().map(f).sum()
}

/// Sums `f(i)` for `i` in `0..n`.
#[cfg(not(feature = "parallel"))]
pub fn sum_range<F>(n: u64, f: F) -> u64
where
    F: Fn(u64) -> u64,
{
    (0..n).map(f).sum()
}

/// Always-sequential twin of [`sum_range`].
pub fn sum_range_seq<F>(n: u64, f: F) -> u64
where
    F: Fn(u64) -> u64,
{
    (0..n).map(f).sum()
}

/// Maps `f` over `0..n`, preserving index order in the output.
#[cfg(feature = "parallel")]
pub fn map_range<T, F>(n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n`, preserving index order in the output.
#[cfg(not(feature = "parallel"))]
pub fn map_range<T, F>(n: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..n).map(f).collect()
}

/// Always-sequential twin of [`map_range`].
pub fn map_range_seq<T, F>(n: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..n).map(f).collect()
}
