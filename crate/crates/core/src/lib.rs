//! Exact inertia of graph adjacency matrices, the three inertia-preserving
//! congruent vertex transformations, and a mechanical classification of the
//! graphs with exactly two positive eigenvalues and one zero eigenvalue.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bit-row graphs, the constructions used throughout (complete
//!   multipartite graphs, the nested two-clique graphs `G_n`, generalized
//!   lexicographic products, `B_k` expansions, k-joinings), induced-subgraph
//!   search, isomorphism and the closed-twin quotient.
//! * [`spectra`]: exact inertia by rational symmetric congruence reduction and
//!   an independent cyclic Jacobi eigensolver used as an oracle.
//! * [`transforms`]: detection, application and certification of I-, II- and
//!   III-type congruent vertices.
//! * [`classifier`]: membership tests and certificate-producing matchers.
//! * [`enumerator`]: the `B_k(n)` census, emptiness checks at order 14,
//!   parametric-family cross validation and exhaustive small-order sweeps.

pub mod classifier;
pub mod enumerator;
mod error;
pub mod graph;
pub mod spectra;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{BkSpec, Graph};
pub use spectra::Inertia;
