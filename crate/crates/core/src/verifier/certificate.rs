//! Machine-checkable verdicts for identity verification.
//!
//! A certificate either lists per-entry hull vertex fingerprints (the
//! identity holds) or carries a self-validating counterexample: a separating
//! direction, the witness matrix pair read off from it, and the two evaluated
//! entry values, which must differ by direct recomputation.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::digraph::Config;
use crate::error::{Error, Limits, Result};
use crate::matrix::{render_matrix, Matrix};
use crate::semiring::{Rat, TropScalar};
use crate::words::Word;

/// Outcome of the decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Refuted,
    TrivialPair,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Verdict::Holds => "HOLDS",
            Verdict::Refuted => "REFUTED",
            Verdict::TrivialPair => "TRIVIAL_PAIR",
        };
        write!(f, "{text}")
    }
}

/// Which side of the pair owns the offending vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    U,
    V,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if matches!(self, Side::U) { "u" } else { "v" })
    }
}

/// Sorted vertex list of one matrix entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryVertices {
    /// 0-based entry index.
    pub entry: (usize, usize),
    pub vertices: Vec<Config>,
}

/// A validated counterexample to the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutedWitness {
    /// 0-based mismatching entry.
    pub entry: (usize, usize),
    /// A hull vertex of one side's configuration set that lies strictly
    /// outside the other side's hull.
    pub offending_vertex: Config,
    pub offending_side: Side,
    /// Strictly separating direction; the witness matrices read its
    /// coordinates.
    pub direction: Vec<Rat>,
    pub margin: Rat,
    pub witness_a: Matrix<TropScalar>,
    pub witness_b: Matrix<TropScalar>,
    pub value_u: TropScalar,
    pub value_v: TropScalar,
}

impl RefutedWitness {
    /// Builds the witness, recomputing both entry values from scratch; a
    /// witness whose evaluations agree is rejected as an internal error.
    #[allow(clippy::too_many_arguments)]
    pub fn validated(
        entry: (usize, usize),
        offending_vertex: Config,
        offending_side: Side,
        direction: Vec<Rat>,
        margin: Rat,
        witness_a: Matrix<TropScalar>,
        witness_b: Matrix<TropScalar>,
        u: &Word,
        v: &Word,
    ) -> Result<Self> {
        let eval_u = Matrix::eval_word(u, &witness_a, &witness_b)?;
        let eval_v = Matrix::eval_word(v, &witness_a, &witness_b)?;
        let value_u = eval_u.entry(entry.0, entry.1).clone();
        let value_v = eval_v.entry(entry.0, entry.1).clone();
        if value_u == value_v {
            return Err(Error::Internal(format!(
                "counterexample failed re-validation: both sides evaluate to {value_u} \
                 at entry ({}, {})",
                entry.0 + 1,
                entry.1 + 1
            )));
        }
        Ok(RefutedWitness {
            entry,
            offending_vertex,
            offending_side,
            direction,
            margin,
            witness_a,
            witness_b,
            value_u,
            value_v,
        })
    }
}

/// Verdict-specific payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertData {
    Holds { fingerprints: Vec<EntryVertices> },
    Refuted(Box<RefutedWitness>),
    TrivialPair,
}

/// The full certificate for a word pair at a fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub u: Word,
    pub v: Word,
    pub pruned: bool,
    pub max_set: usize,
    pub data: CertData,
}

impl Certificate {
    pub fn verdict(&self) -> Verdict {
        match &self.data {
            CertData::Holds { .. } => Verdict::Holds,
            CertData::Refuted(_) => Verdict::Refuted,
            CertData::TrivialPair => Verdict::TrivialPair,
        }
    }

    pub fn trivial_pair(n: usize, u: Word, v: Word, limits: &Limits) -> Self {
        Certificate {
            n,
            u,
            v,
            pruned: false,
            max_set: limits.max_set,
            data: CertData::TrivialPair,
        }
    }

    /// Plain-text rendering with stable key order; reports and digests are
    /// derived from these exact bytes.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("verdict: {}\n", self.verdict()));
        out.push_str(&format!("n: {}\n", self.n));
        out.push_str(&format!("u: {}\n", self.u));
        out.push_str(&format!("v: {}\n", self.v));
        out.push_str(&format!(
            "prune: {}\n",
            if self.pruned { "on" } else { "off" }
        ));
        out.push_str(&format!("max-set: {}\n", self.max_set));
        match &self.data {
            CertData::TrivialPair => {}
            CertData::Holds { fingerprints } => {
                out.push_str(&format!("entries: {}\n", fingerprints.len()));
                for ev in fingerprints {
                    out.push_str(&format!("entry {} {}\n", ev.entry.0 + 1, ev.entry.1 + 1));
                    for vertex in &ev.vertices {
                        out.push_str(&format!("  vertex {vertex}\n"));
                    }
                }
            }
            CertData::Refuted(w) => {
                out.push_str(&format!("entry: {} {}\n", w.entry.0 + 1, w.entry.1 + 1));
                out.push_str(&format!("offending-side: {}\n", w.offending_side));
                out.push_str(&format!("offending-vertex: {}\n", w.offending_vertex));
                out.push_str(&format!("direction: {}\n", join_rats(&w.direction)));
                out.push_str(&format!("margin: {}\n", w.margin));
                out.push_str(&format!("matrix-a: {}\n", render_matrix(&w.witness_a)));
                out.push_str(&format!("matrix-b: {}\n", render_matrix(&w.witness_b)));
                out.push_str(&format!("value-u: {}\n", w.value_u));
                out.push_str(&format!("value-v: {}\n", w.value_v));
            }
        }
        out
    }

    /// Hex SHA-256 of the rendered certificate.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.render().as_bytes());
        let bytes = hasher.finalize();
        bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn join_rats(values: &[Rat]) -> String {
    values
        .iter()
        .map(Rat::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
