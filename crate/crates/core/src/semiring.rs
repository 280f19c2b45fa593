//! Exact scalar arithmetic for the max-plus semiring and its supertropical
//! extension.
//!
//! The max-plus semiring is the rationals together with `-inf`, under maximum
//! (as addition) and numeric sum (as multiplication). The supertropical
//! extension adds a "ghost" copy of every finite value; adding two values with
//! equal magnitude produces the ghost of that magnitude instead of the value
//! itself, so ghosts record where maxima are attained more than once.
//!
//! All magnitudes are exact big rationals. Floating point is deliberately
//! absent: ghost creation hinges on exact ties.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero as _;

use crate::error::{Error, Result};

/// Exact rational magnitude used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rational constants.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Convenience constructor for integer constants.
pub fn rat_int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Common interface of the two scalar kinds, used by generic matrix and word
/// evaluation code.
pub trait Semiring: Clone + Eq + Ord + fmt::Debug + fmt::Display {
    /// Additive identity and multiplicative annihilator.
    fn zero() -> Self;
    /// Multiplicative identity.
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

// ---------------------------------------------------------------------------
// Max-plus scalars
// ---------------------------------------------------------------------------

/// An element of the max-plus semiring: `-inf` or an exact rational.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropScalar {
    /// `-inf`, the additive identity and multiplicative annihilator.
    NegInf,
    /// A finite rational weight.
    Fin(Rat),
}

impl TropScalar {
    pub fn fin(numer: i64, denom: i64) -> Self {
        TropScalar::Fin(rat(numer, denom))
    }

    pub fn int(value: i64) -> Self {
        TropScalar::Fin(rat_int(value))
    }

    /// Finite magnitude, if any.
    pub fn magnitude(&self) -> Option<&Rat> {
        match self {
            TropScalar::NegInf => None,
            TropScalar::Fin(r) => Some(r),
        }
    }
}

impl Semiring for TropScalar {
    fn zero() -> Self {
        TropScalar::NegInf
    }

    fn one() -> Self {
        TropScalar::Fin(Rat::zero())
    }

    /// Addition is maximum; `-inf` is neutral.
    fn add(&self, rhs: &Self) -> Self {
        std::cmp::max(self, rhs).clone()
    }

    /// Multiplication is numeric sum; `-inf` absorbs.
    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (TropScalar::Fin(a), TropScalar::Fin(b)) => TropScalar::Fin(a + b),
            _ => TropScalar::NegInf,
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => write!(f, "-inf"),
            TropScalar::Fin(r) => write!(f, "{}", r),
        }
    }
}

impl FromStr for TropScalar {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match SupScalar::from_str(text)? {
            SupScalar::Zero => Ok(TropScalar::NegInf),
            SupScalar::Real(r) => Ok(TropScalar::Fin(r)),
            SupScalar::Ghost(_) => Err(Error::Parse(format!(
                "ghost scalar `{text}` not allowed where a max-plus scalar is expected"
            ))),
        }
    }
}

// ---------------------------------------------------------------------------
// Supertropical scalars
// ---------------------------------------------------------------------------

/// An element of the supertropical semiring: zero, a real value, or a ghost.
///
/// The total order is `Zero < Real(a) < Ghost(a) < Real(b) < Ghost(b)` for
/// `a < b`; addition returns the larger element unless the two magnitudes
/// coincide, in which case the ghost of that magnitude is returned.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SupScalar {
    Zero,
    Real(Rat),
    Ghost(Rat),
}

impl SupScalar {
    pub fn real(numer: i64, denom: i64) -> Self {
        SupScalar::Real(rat(numer, denom))
    }

    pub fn real_int(value: i64) -> Self {
        SupScalar::Real(rat_int(value))
    }

    pub fn ghost(numer: i64, denom: i64) -> Self {
        SupScalar::Ghost(rat(numer, denom))
    }

    pub fn ghost_int(value: i64) -> Self {
        SupScalar::Ghost(rat_int(value))
    }

    /// Finite magnitude, if any.
    pub fn magnitude(&self) -> Option<&Rat> {
        match self {
            SupScalar::Zero => None,
            SupScalar::Real(r) | SupScalar::Ghost(r) => Some(r),
        }
    }

    pub fn is_ghost(&self) -> bool {
        matches!(self, SupScalar::Ghost(_))
    }

    /// The ghost projection: reals become ghosts, ghosts and zero are fixed.
    pub fn nu(&self) -> SupScalar {
        match self {
            SupScalar::Zero => SupScalar::Zero,
            SupScalar::Real(r) | SupScalar::Ghost(r) => SupScalar::Ghost(r.clone()),
        }
    }

    /// True iff both sides have the same ghost projection.
    pub fn nu_equiv(&self, other: &SupScalar) -> bool {
        self.nu() == other.nu()
    }

    /// The ghost-free lift: ghosts become reals, reals and zero are fixed.
    /// The result is always nu-equivalent to the input.
    pub fn hat(&self) -> SupScalar {
        match self {
            SupScalar::Zero => SupScalar::Zero,
            SupScalar::Real(r) => SupScalar::Real(r.clone()),
            SupScalar::Ghost(r) => SupScalar::Real(r.clone()),
        }
    }

    /// Ghost-free scalars convert to the max-plus kind.
    pub fn to_trop(&self) -> Option<TropScalar> {
        match self {
            SupScalar::Zero => Some(TropScalar::NegInf),
            SupScalar::Real(r) => Some(TropScalar::Fin(r.clone())),
            SupScalar::Ghost(_) => None,
        }
    }
}

impl From<TropScalar> for SupScalar {
    fn from(t: TropScalar) -> Self {
        match t {
            TropScalar::NegInf => SupScalar::Zero,
            TropScalar::Fin(r) => SupScalar::Real(r),
        }
    }
}

impl Ord for SupScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.magnitude(), other.magnitude()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a
                .cmp(b)
                .then_with(|| self.is_ghost().cmp(&other.is_ghost())),
        }
    }
}

impl PartialOrd for SupScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Semiring for SupScalar {
    fn zero() -> Self {
        SupScalar::Zero
    }

    fn one() -> Self {
        SupScalar::Real(Rat::zero())
    }

    /// The larger element when the magnitudes differ, the ghost of the shared
    /// magnitude when they coincide; zero is neutral.
    fn add(&self, rhs: &Self) -> Self {
        if self.nu_equiv(rhs) {
            self.nu()
        } else {
            std::cmp::max(self, rhs).clone()
        }
    }

    /// Magnitudes add; the result is real iff both inputs are real; zero
    /// absorbs.
    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (SupScalar::Zero, _) | (_, SupScalar::Zero) => SupScalar::Zero,
            (SupScalar::Real(a), SupScalar::Real(b)) => SupScalar::Real(a + b),
            (x, y) => {
                let a = x.magnitude().expect("finite");
                let b = y.magnitude().expect("finite");
                SupScalar::Ghost(a + b)
            }
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, SupScalar::Zero)
    }
}

impl fmt::Display for SupScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupScalar::Zero => write!(f, "-inf"),
            SupScalar::Real(r) => write!(f, "{}", r),
            SupScalar::Ghost(r) => write!(f, "{}v", r),
        }
    }
}

impl FromStr for SupScalar {
    type Err = Error;

    /// Parses the textual scalar syntax: `-inf`, `p`, `p/q`, with an optional
    /// `v` suffix marking a ghost. Parsing is exact; decimal notation is
    /// rejected.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed == "-inf" {
            return Ok(SupScalar::Zero);
        }
        let (body, ghost) = match trimmed.strip_suffix('v') {
            Some(rest) => (rest, true),
            None => (trimmed, false),
        };
        let r = parse_rat(body)
            .ok_or_else(|| Error::Parse(format!("invalid scalar `{trimmed}`")))?;
        Ok(if ghost {
            SupScalar::Ghost(r)
        } else {
            SupScalar::Real(r)
        })
    }
}

fn parse_rat(body: &str) -> Option<Rat> {
    fn parse_int(digits: &str) -> Option<BigInt> {
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        digits.parse::<BigInt>().ok()
    }

    let (negative, unsigned) = match body.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, body),
    };
    let (numer_text, denom_text) = match unsigned.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (unsigned, None),
    };
    let mut numer = parse_int(numer_text)?;
    if negative {
        numer = -numer;
    }
    let denom = match denom_text {
        Some(d) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            d
        }
        None => BigInt::from(1),
    };
    Some(Rat::new(numer, denom))
}
