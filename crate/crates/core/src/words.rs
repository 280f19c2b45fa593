//! Words over the two-letter alphabet `{a, b}`, identity pairs, evaluation in
//! an arbitrary monoid, and substitution.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the two generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A nonempty word over `{a, b}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)] // words are nonempty by construction
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Letter multiplicities `(count_a, count_b)`.
    pub fn content(&self) -> (usize, usize) {
        let a = self.0.iter().filter(|&&l| l == Letter::A).count();
        (a, self.0.len() - a)
    }

    /// Left-to-right product substituting `a -> s`, `b -> t`.
    pub fn evaluate<T: Clone>(&self, s: &T, t: &T, mul: impl Fn(&T, &T) -> T) -> T {
        let pick = |l: Letter| match l {
            Letter::A => s,
            Letter::B => t,
        };
        let mut iter = self.0.iter();
        let mut acc = pick(*iter.next().expect("nonempty")).clone();
        for &l in iter {
            acc = mul(&acc, pick(l));
        }
        acc
    }

    /// Homomorphic image `a -> u1`, `b -> v1`; the result has length
    /// `count_a * len(u1) + count_b * len(v1)`.
    pub fn substitute(&self, u1: &Word, v1: &Word) -> Word {
        let mut out = Vec::new();
        for &l in &self.0 {
            let src = match l {
                Letter::A => u1,
                Letter::B => v1,
            };
            out.extend_from_slice(&src.0);
        }
        Word(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Letters `a`/`b` only; `.` and whitespace are ignored separators.
    fn from_str(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (pos, c) in text.chars().enumerate() {
            match c {
                'a' => letters.push(Letter::A),
                'b' => letters.push(Letter::B),
                '.' => {}
                c if c.is_whitespace() => {}
                other => {
                    return Err(Error::Parse(format!(
                        "illegal character `{other}` at position {}",
                        pos + 1
                    )))
                }
            }
        }
        Word::new(letters)
    }
}

/// An ordered pair of distinct words; the candidate identity `u = v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Identity {
    u: Word,
    v: Word,
}

impl Identity {
    pub fn new(u: Word, v: Word) -> Result<Self> {
        if u == v {
            return Err(Error::TrivialPair);
        }
        Ok(Identity { u, v })
    }

    pub fn u(&self) -> &Word {
        &self.u
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    /// The identity's length: the longer of the two sides.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.u.len().max(self.v.len())
    }

    /// Substitutes `inner` into both sides of `self`. A trivial result (both
    /// sides equal) is reported as `Error::TrivialPair`, not as an identity.
    pub fn compose(&self, inner: &Identity) -> Result<Identity> {
        let u = self.u.substitute(&inner.u, &inner.v);
        let v = self.v.substitute(&inner.u, &inner.v);
        Identity::new(u, v)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.u, self.v)
    }
}

// ---------------------------------------------------------------------------
// Identity file format
// ---------------------------------------------------------------------------

/// Parses the identity file format: lines `u: <word>` and `v: <word>`, with
/// `#` comment lines and blank lines ignored. Returns the raw word pair; the
/// pair may be trivial (`u == v`), which callers surface as a distinct status.
pub fn parse_identity_file(text: &str) -> Result<(Word, Word)> {
    let mut u = None;
    let mut v = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| {
            Error::Parse(format!("line {}: expected `u: <word>` or `v: <word>`", idx + 1))
        })?;
        let word: Word = value
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", idx + 1)))?;
        let slot = match key.trim() {
            "u" => &mut u,
            "v" => &mut v,
            other => {
                return Err(Error::Parse(format!(
                    "line {}: unknown key `{other}`",
                    idx + 1
                )))
            }
        };
        if slot.replace(word).is_some() {
            return Err(Error::Parse(format!(
                "line {}: duplicate `{}` line",
                idx + 1,
                key.trim()
            )));
        }
    }
    match (u, v) {
        (Some(u), Some(v)) => Ok((u, v)),
        (None, _) => Err(Error::Parse("missing `u:` line".into())),
        (_, None) => Err(Error::Parse("missing `v:` line".into())),
    }
}

/// Renders an identity file, optionally preceded by `#` comment lines.
pub fn render_identity_file(u: &Word, v: &Word, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("u: {u}\nv: {v}\n"));
    out
}
