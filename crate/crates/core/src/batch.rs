//! Certifying many independent instances, in parallel when the `parallel` feature is on.

use crate::cert::{certify_circ1, certify_circ1rc, certify_graph, Certificate};
use crate::error::Result;
use crate::graphs::Graph;
use crate::matrix::BinaryMatrix;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    /// Falls back to sequential without the `parallel` feature.
    #[default]
    Parallel,
}

impl Mode {
    /// The mode actually used.
    pub fn effective(self) -> Mode {
        if cfg!(feature = "parallel") {
            self
        } else {
            Mode::Sequential
        }
    }
}

/// `f` applied to every item, results in input order.
pub fn run_batch<T, R, F>(items: &[T], mode: Mode, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

pub fn certify_circ1_batch(ms: &[BinaryMatrix], mode: Mode) -> Vec<Result<Certificate>> {
    run_batch(ms, mode, certify_circ1)
}

pub fn certify_circ1rc_batch(ms: &[BinaryMatrix], mode: Mode) -> Vec<Result<Certificate>> {
    run_batch(ms, mode, certify_circ1rc)
}

pub fn certify_graph_batch(gs: &[Graph], mode: Mode) -> Vec<Result<Certificate>> {
    run_batch(gs, mode, certify_graph)
}
