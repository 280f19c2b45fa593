//! Exact max-plus (tropical) and supertropical matrix algebra, with a
//! polytope-based decision procedure for two-letter semigroup identities of
//! matrix monoids.
//!
//! The crate provides:
//!
//! - exact scalar and matrix arithmetic over the max-plus semiring and its
//!   supertropical extension ([`semiring`], [`matrix`]);
//! - words over `{a, b}`, identity pairs, evaluation and substitution
//!   ([`words`]);
//! - labeled-weighted digraphs, walk enumeration as a semantic oracle, and
//!   the double-arc multigraph view of ghost weights ([`digraph`]);
//! - lattice-point hulls with exact vertex identification and separation
//!   certificates ([`polytope`]);
//! - the identity verifier: hull-equality decision, counterexample witnesses,
//!   composition of certified identities into supertropical ones, randomized
//!   exact validation, and walk-correspondence diagnostics ([`verifier`]).
//!
//! All arithmetic is exact rational; there is no floating point anywhere in
//! the decision paths.

pub mod digraph;
pub mod error;
pub mod lp;
pub mod matrix;
pub mod polytope;
pub mod sample;
pub mod semiring;
pub mod verifier;
pub mod words;

pub use digraph::{Config, LwDigraph, Multigraph, Walk};
pub use error::{Error, Limits, Result};
pub use matrix::Matrix;
pub use polytope::{ConfigSet, VertexReport};
pub use semiring::{Rat, Semiring, SupScalar, TropScalar};
pub use words::{Identity, Letter, Word};
