//! Execution strategy for batch work: quasiorder rows, subset sweeps,
//! corpus checks and enumeration shards.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on
//! rayon; without it every strategy degrades to the sequential loop. Results
//! are always returned in input order, so output never depends on scheduling.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// Maps over `0..len` in contiguous chunks and concatenates the
    /// per-chunk outputs in order.
    pub fn flat_map_chunks<R, F>(self, len: u64, chunk: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(Range<u64>) -> Vec<R> + Sync + Send,
    {
        let chunk = chunk.max(1);
        let chunks = len.div_ceil(chunk) as usize;
        let parts = self.map_range(0..chunks, |c| {
            let start = c as u64 * chunk;
            f(start..(start + chunk).min(len))
        });
        parts.into_iter().flatten().collect()
    }

    /// Runs `f` inside a pool of `threads` workers when parallel execution
    /// is available; otherwise just calls it.
    pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if let Some(t) = threads {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build() {
                return pool.install(f);
            }
        }
        let _ = threads;
        f()
    }
}
