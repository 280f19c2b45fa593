//! Randomized exact validation: evaluate both sides of a candidate identity
//! at random matrix pairs and compare, exactly.
//!
//! Three flavors: direct comparison over either scalar kind; the
//! nu-equivalence check (both sides of a certified max-plus identity agree
//! after the ghost projection at arbitrary supertropical pairs); and the
//! nu-pair check (they agree exactly whenever the two arguments are
//! nu-equivalent to each other). All draws are deterministic in the seed.

use crate::matrix::Matrix;
use crate::sample::{random_retag, random_sup_matrix, random_trop_matrix, rng_from_seed};
use crate::semiring::SupScalar;
use crate::words::Identity;

/// Which semiring the matrices are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    Tropical,
    Supertropical,
}

impl std::fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            ScalarKind::Tropical => "trop",
            ScalarKind::Supertropical => "st",
        };
        write!(f, "{text}")
    }
}

/// A mismatch found by fuzzing; matrices are reported in the supertropical
/// representation (the max-plus kind embeds as real/zero entries).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzCounterexample {
    pub trial: u64,
    pub a: Matrix<SupScalar>,
    pub b: Matrix<SupScalar>,
    /// 0-based mismatching entry.
    pub entry: (usize, usize),
    pub lhs: SupScalar,
    pub rhs: SupScalar,
}

/// Outcome of a fuzzing run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuzzOutcome {
    Pass { trials: u64 },
    Counterexample(Box<FuzzCounterexample>),
}

impl FuzzOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, FuzzOutcome::Pass { .. })
    }
}

fn first_mismatch(
    lhs: &Matrix<SupScalar>,
    rhs: &Matrix<SupScalar>,
) -> Option<((usize, usize), SupScalar, SupScalar)> {
    let n = lhs.n();
    for i in 0..n {
        for j in 0..n {
            if lhs.entry(i, j) != rhs.entry(i, j) {
                return Some(((i, j), lhs.entry(i, j).clone(), rhs.entry(i, j).clone()));
            }
        }
    }
    None
}

/// Evaluates both sides at `trials` random matrix pairs of the given kind;
/// returns the first exact mismatch, if any.
pub fn fuzz_check(
    n: usize,
    id: &Identity,
    kind: ScalarKind,
    trials: u64,
    seed: u64,
) -> FuzzOutcome {
    let mut rng = rng_from_seed(seed);
    for trial in 0..trials {
        let (a, b, lhs, rhs) = match kind {
            ScalarKind::Tropical => {
                let a = random_trop_matrix(n, &mut rng);
                let b = random_trop_matrix(n, &mut rng);
                let lhs = Matrix::eval_word(id.u(), &a, &b).expect("dims agree");
                let rhs = Matrix::eval_word(id.v(), &a, &b).expect("dims agree");
                (a.to_sup(), b.to_sup(), lhs.to_sup(), rhs.to_sup())
            }
            ScalarKind::Supertropical => {
                let a = random_sup_matrix(n, &mut rng);
                let b = random_sup_matrix(n, &mut rng);
                let lhs = Matrix::eval_word(id.u(), &a, &b).expect("dims agree");
                let rhs = Matrix::eval_word(id.v(), &a, &b).expect("dims agree");
                (a, b, lhs, rhs)
            }
        };
        if let Some((entry, l, r)) = first_mismatch(&lhs, &rhs) {
            return FuzzOutcome::Counterexample(Box::new(FuzzCounterexample {
                trial,
                a,
                b,
                entry,
                lhs: l,
                rhs: r,
            }));
        }
    }
    FuzzOutcome::Pass { trials }
}

/// A lemma-check violation: the sampled pair and the failing entry values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub trial: u64,
    pub a: Matrix<SupScalar>,
    pub b: Matrix<SupScalar>,
    pub lhs: Matrix<SupScalar>,
    pub rhs: Matrix<SupScalar>,
}

/// Outcome of a lemma suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaOutcome {
    Pass { trials: u64 },
    Violation(Box<LemmaViolation>),
}

impl LemmaOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, LemmaOutcome::Pass { .. })
    }
}

/// For an identity of the max-plus monoid, both sides evaluated at arbitrary
/// supertropical pairs must agree after the ghost projection. The premise
/// (a HOLDS certificate for the pair) is the caller's responsibility.
pub fn check_lemma_nu_equiv(n: usize, id: &Identity, trials: u64, seed: u64) -> LemmaOutcome {
    let mut rng = rng_from_seed(seed);
    for trial in 0..trials {
        let a = random_sup_matrix(n, &mut rng);
        let b = random_sup_matrix(n, &mut rng);
        let lhs = Matrix::eval_word(id.u(), &a, &b).expect("dims agree");
        let rhs = Matrix::eval_word(id.v(), &a, &b).expect("dims agree");
        if !lhs.nu_equiv(&rhs).expect("dims agree") {
            return LemmaOutcome::Violation(Box::new(LemmaViolation {
                trial,
                a,
                b,
                lhs,
                rhs,
            }));
        }
    }
    LemmaOutcome::Pass { trials }
}

/// For an identity of the max-plus monoid and nu-equivalent arguments
/// (sampled by independently re-tagging each entry), the two sides must be
/// exactly equal, ghost tags included.
pub fn check_lemma_nu_pair(n: usize, id: &Identity, trials: u64, seed: u64) -> LemmaOutcome {
    let mut rng = rng_from_seed(seed);
    for trial in 0..trials {
        let a = random_sup_matrix(n, &mut rng);
        let b = random_retag(&a, &mut rng);
        debug_assert!(a.nu_equiv(&b).expect("same n"));
        let lhs = Matrix::eval_word(id.u(), &a, &b).expect("dims agree");
        let rhs = Matrix::eval_word(id.v(), &a, &b).expect("dims agree");
        if lhs != rhs {
            return LemmaOutcome::Violation(Box::new(LemmaViolation {
                trial,
                a,
                b,
                lhs,
                rhs,
            }));
        }
    }
    LemmaOutcome::Pass { trials }
}
