//! Error and limit types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("node {node} out of range for a {n}-node digraph")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("no arc {from}->{to} labeled {label} in the digraph")]
    MissingArc {
        from: usize,
        to: usize,
        label: char,
    },

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("trivial pair: both sides are the same word")]
    TrivialPair,

    #[error("no separation: the point lies in the convex hull")]
    NoSeparation,

    #[error("premise not certified: {0}")]
    PremiseNotCertified(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Resource limits for enumeration and the configuration-set dynamic program.
///
/// Every operation that can blow up combinatorially takes these explicitly;
/// exceeding a limit is a hard error, never silent truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of walk prefixes a single enumeration may visit.
    pub max_walk_prefixes: u64,
    /// Maximum number of configurations a single DP bucket may hold.
    pub max_set: usize,
    /// Maximum word length accepted by the verifier front ends.
    pub max_word_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_walk_prefixes: 10_000_000,
            max_set: 1_000_000,
            max_word_len: 10_000,
        }
    }
}
