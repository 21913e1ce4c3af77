//! Certifying recognition of the consecutive-ones and circular-ones properties of
//! binary matrices and of concave-round graphs.
//!
//! Every negative answer comes with a minimal forbidden submatrix or induced subgraph
//! that can be checked independently of the algorithm that produced it.

pub mod batch;
pub mod bracelet;
pub mod c1p;
pub mod cert;
pub mod circ_rc;
pub mod circ_rows;
pub mod error;
pub mod formats;
pub mod graphs;
pub mod matrix;
pub mod oracles;

pub use bracelet::BinarySequence;
pub use cert::{Certificate, Instance};
pub use error::{Error, Result};
pub use matrix::{BinaryMatrix, Embedding, IndexMap};
pub use graphs::Graph;
