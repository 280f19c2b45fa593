//! Deterministic random generation of scalars, matrices, and words.
//!
//! Every randomized routine in the crate draws from a ChaCha stream seeded by
//! a single 64-bit value, so runs are reproducible from the seed alone. The
//! entry distribution deliberately mixes zero entries (annihilation), ghost
//! entries (absorption), and small rationals with denominators up to 3 so
//! that exact ties actually occur.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::Matrix;
use crate::semiring::{rat, Rat, SupScalar, TropScalar};
use crate::words::{Letter, Word};

/// The crate-wide deterministic RNG.
pub type Prng = ChaCha8Rng;

/// Creates the RNG for a given seed.
pub fn rng_from_seed(seed: u64) -> Prng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform magnitude `k/m` with `k` in `[-20, 20]` and `m` in `{1, 2, 3}`.
pub fn random_magnitude(rng: &mut Prng) -> Rat {
    let k = rng.gen_range(-20i64..=20);
    let m = rng.gen_range(1i64..=3);
    rat(k, m)
}

/// Zero with probability 1/5, otherwise a random finite value.
pub fn random_trop_scalar(rng: &mut Prng) -> TropScalar {
    if rng.gen_range(0u8..5) == 0 {
        TropScalar::NegInf
    } else {
        TropScalar::Fin(random_magnitude(rng))
    }
}

/// Zero with probability 1/5, ghost with probability 1/5, otherwise real.
pub fn random_sup_scalar(rng: &mut Prng) -> SupScalar {
    match rng.gen_range(0u8..5) {
        0 => SupScalar::Zero,
        1 => SupScalar::Ghost(random_magnitude(rng)),
        _ => SupScalar::Real(random_magnitude(rng)),
    }
}

pub fn random_trop_matrix(n: usize, rng: &mut Prng) -> Matrix<TropScalar> {
    let entries = (0..n * n).map(|_| random_trop_scalar(rng)).collect();
    Matrix::from_rows(n, entries).expect("n > 0")
}

pub fn random_sup_matrix(n: usize, rng: &mut Prng) -> Matrix<SupScalar> {
    let entries = (0..n * n).map(|_| random_sup_scalar(rng)).collect();
    Matrix::from_rows(n, entries).expect("n > 0")
}

/// A uniformly random word of length between 1 and `max_len`.
pub fn random_word(max_len: usize, rng: &mut Prng) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    let letters = (0..len)
        .map(|_| if rng.gen::<bool>() { Letter::A } else { Letter::B })
        .collect();
    Word::new(letters).expect("nonempty")
}

/// Re-tags each entry of `a` independently (real <-> ghost, zero fixed),
/// producing a matrix that is nu-equivalent to `a` by construction.
pub fn random_retag(a: &Matrix<SupScalar>, rng: &mut Prng) -> Matrix<SupScalar> {
    a.map(|entry| match entry {
        SupScalar::Zero => SupScalar::Zero,
        other => {
            let magnitude = other.magnitude().expect("finite").clone();
            if rng.gen::<bool>() {
                SupScalar::Ghost(magnitude)
            } else {
                SupScalar::Real(magnitude)
            }
        }
    })
}
