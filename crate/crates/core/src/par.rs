//! Order-preserving data-parallel map.
//!
//! With the `parallel` feature, work runs on rayon: on the global pool when
//! no width is given, on a dedicated pool of the requested width otherwise.
//! A width of 1, or a build without the feature, runs sequentially. The
//! output order always matches the input order.

/// Maps `f` over `items`, preserving order.
pub fn ordered_map<T, R, F>(items: &[T], threads: Option<usize>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        match threads {
            Some(1) => {}
            None => return items.par_iter().map(&f).collect(),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .expect("thread pool");
                return pool.install(|| items.par_iter().map(&f).collect());
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    items.iter().map(f).collect()
}

/// Whether this build can run work in parallel.
pub const fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
