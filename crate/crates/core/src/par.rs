//! Order-preserving data parallelism. With the `parallel` feature the maps
//! run on the rayon pool; without it they run sequentially. Results come
//! back in input order either way, so output never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `items.iter().map(f).collect()`, possibly in parallel.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// The first item (in input order) for which `f` returns `Some`.
pub fn find_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).find_first(Option::is_some).flatten()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
