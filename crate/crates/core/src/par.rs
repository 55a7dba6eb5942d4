//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the `map*` functions run on the global rayon
//! pool; without it they are plain iterator maps. The `*_seq` variants are
//! always sequential so callers (and the benches) can compare both paths.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many output coefficients a Cauchy product stays sequential.
pub const PAR_PRODUCT_THRESHOLD: usize = 96;

pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

pub fn map_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Evaluates `f(0), …, f(n - 1)`.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_range_seq(n, f)
    }
}

pub fn map_range_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        assert_eq!(map(&xs, |x| x * x), map_seq(&xs, |x| x * x));
        assert_eq!(map_range(257, |i| i + 1), map_range_seq(257, |i| i + 1));
    }
}
