//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the heavy inner loops fan out over
//! rayon; without it the same helpers run on the current thread. All call
//! sites combine results with order-independent reductions (min/max, OR,
//! counting), so outputs are identical under either mode and any thread
//! count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Runs `f` over disjoint row slices of a raster buffer.
#[cfg(feature = "parallel")]
pub(crate) fn for_each_row<F>(buf: &mut [u8], width: usize, f: F)
where
    F: Fn(usize, &mut [u8]) + Sync + Send,
{
    buf.par_chunks_mut(width).enumerate().for_each(|(y, row)| f(y, row));
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_row<F>(buf: &mut [u8], width: usize, f: F)
where
    F: Fn(usize, &mut [u8]),
{
    for (y, row) in buf.chunks_mut(width).enumerate() {
        f(y, row);
    }
}

/// Name of the active execution mode, used to label benchmark ids.
pub fn execution_mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}
