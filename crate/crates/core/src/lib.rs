//! Exact canonical vector colorings of 1-walk-regular graphs.
//!
//! The crate computes the least-eigenspace projection of a graph's adjacency
//! matrix as an integer matrix (never as floating-point eigenvectors), uses it
//! to decide unique vector colorability by an exact rank computation, and
//! turns the result into one-sided core certificates. Generators for Kneser,
//! q-Kneser and Hamming-type Cayley graphs, and constructors/checkers for the
//! homomorphisms between them, live alongside.
//!
//! Module map:
//!
//! * [`graph`] / [`graph6`]: the graph value type, structural predicates and the codec.
//! * [`exact`]: big-integer polynomials and matrices, characteristic polynomials,
//!   fraction-free rank, Sturm root counting.
//! * [`families`]: deterministic generators with documented vertex orders.
//! * [`walkreg`]: 1- and 2-walk-regularity.
//! * [`cert`]: spectral data, the canonical Gram matrix, the rank test and certificates.
//! * [`hom`]: homomorphism verification, family maps and a backtracking oracle.
//! * [`cli`]: the batch front end behind the `uvc` binary.

pub mod cert;
pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod hom;
pub mod walkreg;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
