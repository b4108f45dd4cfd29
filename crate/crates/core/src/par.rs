//! Parallel iteration shim.
//!
//! With the `parallel` feature this re-exports `rayon::prelude`. Without it,
//! the same method names resolve to ordinary sequential iterators, so call
//! sites stay identical. Only adapters whose signatures agree between rayon
//! and `std::iter` (`map`, `filter`, `filter_map`, `collect`, `sum`, `any`,
//! `all`, `count`) may be used on the results.

#[cfg(feature = "parallel")]
pub use rayon::prelude::*;

#[cfg(not(feature = "parallel"))]
pub use serial::*;

#[cfg(not(feature = "parallel"))]
mod serial {
    pub trait IntoParallelIterator {
        type Iter: Iterator<Item = Self::Item>;
        type Item;
        fn into_par_iter(self) -> Self::Iter;
    }

    impl<I: IntoIterator> IntoParallelIterator for I {
        type Iter = I::IntoIter;
        type Item = I::Item;
        fn into_par_iter(self) -> Self::Iter {
            self.into_iter()
        }
    }

    pub trait IntoParallelRefIterator<'a> {
        type Iter: Iterator<Item = &'a Self::Item>;
        type Item: 'a;
        fn par_iter(&'a self) -> Self::Iter;
    }

    impl<'a, T: 'a> IntoParallelRefIterator<'a> for [T] {
        type Iter = std::slice::Iter<'a, T>;
        type Item = T;
        fn par_iter(&'a self) -> Self::Iter {
            self.iter()
        }
    }
}

/// Number of worker threads the parallel paths will use (1 without the
/// `parallel` feature).
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Sizes the global worker pool. A no-op in sequential builds; returns an
/// error string if the pool was already initialised.
pub fn configure_threads(threads: usize) -> Result<(), String> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        Ok(())
    }
}
