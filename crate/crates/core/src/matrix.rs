//! Square matrices over either scalar kind, with the monoid multiplication
//! induced by the semiring operations.
//!
//! Matrices are immutable values; products allocate fresh results so that
//! certificates can hold references to inputs that never change.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::{Semiring, SupScalar, TropScalar};
use crate::words::Word;

/// An `n x n` matrix over a semiring scalar.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Semiring> Matrix<S> {
    /// Builds a matrix from row-major entries; `entries.len()` must be `n*n`
    /// and `n` must be positive.
    pub fn from_rows(n: usize, entries: Vec<S>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("matrix dimension must be positive".into()));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: entries.len(),
            });
        }
        Ok(Matrix { n, entries })
    }

    /// The all-zero matrix (every entry `-inf`).
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![S::zero(); n * n],
        }
    }

    /// The multiplicative identity: one on the diagonal, zero elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = S::one();
        }
        m
    }

    /// Identity scaled by `c` on the diagonal.
    pub fn scaled_identity(n: usize, c: S) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// Monoid product; the dimensions must agree.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = S::zero();
                for k in 0..n {
                    let term = self.entry(i, k).mul(rhs.entry(k, j));
                    acc = acc.add(&term);
                }
                out.push(acc);
            }
        }
        Ok(Matrix { n, entries: out })
    }

    /// Evaluates a two-letter word at the pair `(a, b)` by left-to-right
    /// multiplication.
    pub fn eval_word(word: &Word, a: &Self, b: &Self) -> Result<Self> {
        if a.n != b.n {
            return Err(Error::DimensionMismatch {
                left: a.n,
                right: b.n,
            });
        }
        Ok(word.evaluate(a, b, |x, y| x.mul(y).expect("equal dimensions")))
    }

    pub fn map<T: Semiring>(&self, mut f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }
}

impl Matrix<SupScalar> {
    /// Entrywise ghost projection.
    pub fn nu(&self) -> Self {
        self.map(|x| x.nu())
    }

    /// True iff the two matrices agree after the ghost projection.
    pub fn nu_equiv(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.nu_equiv(b)))
    }

    /// Entrywise ghost-free lift; the result is nu-equivalent to the input
    /// and has no ghost entries.
    pub fn hat(&self) -> Self {
        self.map(|x| x.hat())
    }

    /// Converts to the max-plus kind; fails if any entry is a ghost.
    pub fn to_trop(&self) -> Option<Matrix<TropScalar>> {
        let entries: Option<Vec<_>> = self.entries.iter().map(|x| x.to_trop()).collect();
        Some(Matrix {
            n: self.n,
            entries: entries?,
        })
    }
}

impl Matrix<TropScalar> {
    /// Embeds into the supertropical kind (real/zero entries).
    pub fn to_sup(&self) -> Matrix<SupScalar> {
        self.map(|x| SupScalar::from(x.clone()))
    }
}

impl<S: Semiring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

/// On-disk form: a JSON object `{"n": ..., "rows": [[...], ...]}` whose
/// entries use the textual scalar syntax. Round-trips are exact.
#[derive(Serialize, Deserialize)]
struct MatrixFile {
    n: usize,
    rows: Vec<Vec<String>>,
}

fn matrix_to_file<S: Semiring>(m: &Matrix<S>) -> MatrixFile {
    MatrixFile {
        n: m.n(),
        rows: (0..m.n())
            .map(|i| (0..m.n()).map(|j| m.entry(i, j).to_string()).collect())
            .collect(),
    }
}

fn matrix_from_file<S, F>(file: MatrixFile, parse: F) -> Result<Matrix<S>>
where
    S: Semiring,
    F: Fn(&str) -> Result<S>,
{
    if file.rows.len() != file.n {
        return Err(Error::Parse(format!(
            "matrix declares n={} but has {} rows",
            file.n,
            file.rows.len()
        )));
    }
    let mut entries = Vec::with_capacity(file.n * file.n);
    for (i, row) in file.rows.iter().enumerate() {
        if row.len() != file.n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                file.n
            )));
        }
        for text in row {
            entries.push(parse(text)?);
        }
    }
    Matrix::from_rows(file.n, entries)
}

/// Parses a supertropical matrix from its JSON file text.
pub fn parse_sup_matrix(text: &str) -> Result<Matrix<SupScalar>> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix file: {e}")))?;
    matrix_from_file(file, |s| s.parse())
}

/// Parses a max-plus matrix: same format, ghost entries rejected.
pub fn parse_trop_matrix(text: &str) -> Result<Matrix<TropScalar>> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix file: {e}")))?;
    matrix_from_file(file, |s| s.parse())
}

/// Renders a matrix in the JSON file format, single line, stable key order.
pub fn render_matrix<S: Semiring>(m: &Matrix<S>) -> String {
    serde_json::to_string(&matrix_to_file(m)).expect("matrix serialization cannot fail")
}
