//! Graphon signal processing toolkit.
//!
//! Step graphons on finite partitions of [0, 1] serve as the common
//! computational representation of dense graphs, block models, and graphon
//! limits. On top of them the crate provides:
//!
//! - weighted dense eigendecomposition with signed eigenvalue indexing and
//!   eigenspace projections ([`linalg`]),
//! - graph ↔ graphon embeddings, signal lifting, cut norms, and partition
//!   refinement ([`graphon`], [`cutnorm`]),
//! - seeded w-random and fixed-block sampling ([`sampling`]),
//! - graph and graphon Fourier transforms, sample-to-reference eigenspace
//!   matching, convergence diagnostics, and polynomial filters ([`gft`]),
//! - finite-group harmonic analysis and Cayley-graphon eigenbases built from
//!   irreducible representations ([`cayley`]).

pub mod cayley;
pub mod cutnorm;
pub mod error;
pub mod gft;
pub mod graphon;
pub mod io;
mod lapack;
pub mod linalg;
pub mod sampling;

pub use error::{Error, Result};
