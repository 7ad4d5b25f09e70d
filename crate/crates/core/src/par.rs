//! Data-parallel loops over index ranges.
//!
//! With the `parallel` feature these run on the rayon global pool; without it
//! they are plain sequential iterators. Reductions are integer sums or
//! order-preserving collects, so results never depend on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn sum<F>(n: usize, f: F) -> i128
where
    F: Fn(usize) -> i128 + Sync + Send,
{
    (0..n).into_par_iter().map(f).sum()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sum<F>(n: usize, f: F) -> i128
where
    F: Fn(usize) -> i128 + Sync + Send,
{
    (0..n).map(f).sum()
}

#[cfg(feature = "parallel")]
pub(crate) fn map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}
