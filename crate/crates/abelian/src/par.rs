//! Thin indirection over rayon so every data-parallel loop in the crate has
//! a sequential twin. Built with the default `parallel` feature the closures
//! run on the rayon pool; without it the same call sites run serially and
//! produce identical results.

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Minimum of `f` over `0..n`, `None` when `n == 0`.
#[cfg(feature = "parallel")]
pub(crate) fn range_min<F>(n: u64, f: F) -> Option<u64>
where
    F: Fn(u64) -> u64 + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).min()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn range_min<F>(n: u64, f: F) -> Option<u64>
where
    F: Fn(u64) -> u64,
{
    (0..n).map(f).min()
}
