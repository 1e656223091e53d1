//! Execution strategy for the data-parallel kernels.
//!
//! Maps are order preserving under both strategies, and every reduction in the
//! crate happens afterwards in a fixed order, so results do not depend on the
//! strategy chosen.

use std::ops::Range;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise sequential.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn map_range<T, F>(self, range: Range<usize>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Execution::Sequential => range.map(f).collect(),
            Execution::Parallel => par_map(range, f),
        }
    }

    pub fn try_map_range<T, E, F>(self, range: Range<usize>, f: F) -> Result<Vec<T>, E>
    where
        T: Send,
        E: Send,
        F: Fn(usize) -> Result<T, E> + Sync + Send,
    {
        self.map_range(range, f).into_iter().collect()
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, F>(range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, F>(range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    range.map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_keep_order() {
        let f = |i: usize| (i as f64).sqrt();
        let a = Execution::Sequential.map_range(0..1000, f);
        let b = Execution::Parallel.map_range(0..1000, f);
        assert_eq!(a, b);
    }
}
