//! Worker control for the data-parallel search kernels.
//!
//! Every kernel reduces per-item results with an associative, commutative
//! total order, so the outcome is identical for any worker count. Without the
//! `parallel` feature all modes degrade to the sequential path.

/// How to schedule independent subproblems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    /// Single worker, plain iteration.
    Sequential,
    /// The process-global thread pool (available parallelism).
    #[default]
    Default,
    /// A dedicated pool with exactly this many threads.
    Threads(usize),
}

impl Parallelism {
    pub fn from_workers(workers: Option<usize>) -> Self {
        match workers {
            None => Parallelism::Default,
            Some(0) | Some(1) => Parallelism::Sequential,
            Some(w) => Parallelism::Threads(w),
        }
    }
}

/// Maps `f` over `items`, collecting results in input order. `make_ws`
/// produces a per-worker scratch workspace.
pub fn map_collect<I, T, W, FI, F>(par: Parallelism, items: &[I], make_ws: FI, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    FI: Fn() -> W + Sync + Send,
    F: Fn(&mut W, &I) -> T + Sync + Send,
{
    match par {
        Parallelism::Sequential => map_sequential(items, make_ws, f),
        #[cfg(feature = "parallel")]
        Parallelism::Default => {
            use rayon::prelude::*;
            items
                .par_iter()
                .map_init(&make_ws, |ws, item| f(ws, item))
                .collect()
        }
        #[cfg(feature = "parallel")]
        Parallelism::Threads(w) => {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("failed to build worker pool");
            pool.install(|| {
                items
                    .par_iter()
                    .map_init(&make_ws, |ws, item| f(ws, item))
                    .collect()
            })
        }
        #[cfg(not(feature = "parallel"))]
        _ => map_sequential(items, make_ws, f),
    }
}

fn map_sequential<I, T, W, FI, F>(items: &[I], make_ws: FI, f: F) -> Vec<T>
where
    FI: Fn() -> W,
    F: Fn(&mut W, &I) -> T,
{
    let mut ws = make_ws();
    items.iter().map(|item| f(&mut ws, item)).collect()
}
