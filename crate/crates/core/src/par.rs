//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`ExecMode::Parallel`] runs on
//! the rayon global pool. Without it, every mode runs sequentially.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    /// Whether this mode actually uses worker threads in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Folds `f` over every index in `range` and combines partial results with
/// `reduce`. `reduce` must be associative and `identity` its unit.
pub fn fold_range<R, I, F, C>(mode: ExecMode, range: Range<u64>, identity: I, f: F, reduce: C) -> R
where
    R: Send,
    I: Fn() -> R + Sync + Send,
    F: Fn(R, u64) -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return range
            .into_par_iter()
            .fold(&identity, &f)
            .reduce(&identity, &reduce);
    }
    let _ = (mode, &reduce);
    range.fold(identity(), f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map(ExecMode::Sequential, &items, |x| x * x);
        let par = map(ExecMode::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);

        let sum = |mode| fold_range(mode, 0..10_000, || 0u64, |a, i| a + i, |a, b| a + b);
        assert_eq!(sum(ExecMode::Sequential), sum(ExecMode::Parallel));
        assert_eq!(sum(ExecMode::Sequential), 49_995_000);
    }
}
