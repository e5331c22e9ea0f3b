//! Dense matrices over a [`Ring`], minor deletion, and the bordering
//! constructions used to replace a row or grow a matrix by one.
//!
//! Storage access (`at`, `row`) is 0-based. Everything that names a row or
//! column in the mathematical sense (minors, row replacement) is 1-based,
//! matching the `a[r,c]` labels.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{EntryVar, MultiPoly};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Matrix over the polynomial ring ℤ[a[r,c]].
pub type SymMatrix = Matrix<MultiPoly>;

/// Matrix of arbitrary-precision integers.
pub type IntMatrix = Matrix<BigInt>;

impl<T> Matrix<T> {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MalformedMatrix(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for (idx, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries, expected {n_cols}",
                    idx + 1,
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: n_rows, cols: n_cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Entry at 0-based position `(r, c)`.
    ///
    /// # Panics
    /// If the position is outside the matrix.
    pub fn at(&self, r: usize, c: usize) -> &T {
        assert!(r < self.rows && c < self.cols, "({r}, {c}) outside {}x{}", self.rows, self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Submatrix on the given 0-based row and column positions, in order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self.at(rows[r], cols[c]).clone())
    }

    /// Deletes the rows and columns named by `spec` (original 1-based
    /// indices). Surviving entries keep their values, so symbolic entries
    /// keep their original `a[r,c]` labels.
    pub fn minor(&self, spec: &MinorSpec) -> Result<Self> {
        let n = self.order()?;
        for &idx in spec.rows().iter().chain(spec.cols()) {
            if idx > n {
                return Err(Error::IndexOutOfRange { index: idx, bound: n });
            }
        }
        let keep_rows: Vec<usize> = (0..n).filter(|r| !spec.rows().contains(&(r + 1))).collect();
        let keep_cols: Vec<usize> = (0..n).filter(|c| !spec.cols().contains(&(c + 1))).collect();
        Ok(self.select(&keep_rows, &keep_cols))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Rows and columns to delete, in original 1-based indices.
///
/// Either one row and one column, or two distinct rows and two distinct
/// columns, each pair stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    /// Deletes row `i` and column `k`.
    pub fn single(i: usize, k: usize) -> Result<Self> {
        if i == 0 || k == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(MinorSpec { rows: vec![i], cols: vec![k] })
    }

    /// Deletes rows `i, j` and columns `k, l`. The pairs may be given in
    /// either order but must be distinct.
    pub fn double(i: usize, j: usize, k: usize, l: usize) -> Result<Self> {
        if [i, j, k, l].contains(&0) {
            return Err(Error::ZeroIndex);
        }
        if i == j {
            return Err(Error::InvalidIndexPair(i, j));
        }
        if k == l {
            return Err(Error::InvalidIndexPair(k, l));
        }
        Ok(MinorSpec {
            rows: vec![i.min(j), i.max(j)],
            cols: vec![k.min(l), k.max(l)],
        })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// The `n`×`n` matrix whose `(r, c)` entry is the indeterminate `a[r,c]`.
pub fn generic_matrix(n: usize) -> Result<SymMatrix> {
    if n < 1 {
        return Err(Error::InvalidDimension(n));
    }
    Ok(Matrix::from_fn(n, n, |r, c| MultiPoly::var(var(r + 1, c + 1))))
}

fn var(row: usize, col: usize) -> EntryVar {
    EntryVar::new(row, col).expect("1-based by construction")
}

/// Replaces row `i` (1-based) of an `n`×`n` matrix with the border
/// variables `a[n+1,1] … a[n+1,n]`.
pub fn replace_row_with_border(m: &SymMatrix, i: usize) -> Result<SymMatrix> {
    let n = m.order()?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    Ok(Matrix::from_fn(n, n, |r, c| {
        if r + 1 == i {
            MultiPoly::var(var(n + 1, c + 1))
        } else {
            m.at(r, c).clone()
        }
    }))
}

/// Borders an `n`×`n` matrix with a new last column `a[1,n+1] … a[n+1,n+1]`
/// and a new last row `a[n+1,1] … a[n+1,n+1]`.
pub fn extend(m: &SymMatrix) -> Result<SymMatrix> {
    let n = m.order()?;
    Ok(Matrix::from_fn(n + 1, n + 1, |r, c| {
        if r < n && c < n {
            m.at(r, c).clone()
        } else {
            MultiPoly::var(var(r + 1, c + 1))
        }
    }))
}

impl IntMatrix {
    /// Embeds integer entries as constant polynomials.
    pub fn to_symbolic(&self) -> SymMatrix {
        self.map(|x| MultiPoly::constant(x.clone()))
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }
}

impl SymMatrix {
    /// Evaluates every entry under `value_of`.
    pub fn eval_with(&self, value_of: impl Fn(EntryVar) -> Option<BigInt>) -> Result<IntMatrix> {
        let entries = self
            .entries()
            .iter()
            .map(|p| p.eval_with(&value_of))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, entries)
    }

    /// True when every entry is a single indeterminate with coefficient 1
    /// and no indeterminate repeats.
    pub fn is_generic(&self) -> bool {
        let mut seen: Vec<EntryVar> = Vec::with_capacity(self.entries.len());
        for p in self.entries() {
            match p.as_single_var() {
                Some(v) => seen.push(v),
                None => return false,
            }
        }
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// JSON form: `{"rows": n, "cols": m, "entries": [["1", "-2"], ...]}` with
/// integers as decimal strings.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl IntMatrix {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedMatrix(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization is infallible")
    }

    fn from_wire(wire: MatrixWire) -> Result<Self> {
        if wire.entries.len() != wire.rows {
            return Err(Error::MalformedMatrix(format!(
                "\"rows\" is {} but {} rows are present",
                wire.rows,
                wire.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(wire.rows * wire.cols);
        for (r, row) in wire.entries.iter().enumerate() {
            if row.len() != wire.cols {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries but \"cols\" is {}",
                    r + 1,
                    row.len(),
                    wire.cols
                )));
            }
            for text in row {
                entries.push(parse_decimal(text)?);
            }
        }
        Matrix::new(wire.rows, wire.cols, entries)
    }
}

fn parse_decimal(text: &str) -> Result<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedMatrix(format!("{text:?} is not a decimal integer")));
    }
    text.parse().map_err(|_| Error::MalformedMatrix(format!("{text:?} is not a decimal integer")))
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixWire {
            rows: self.rows,
            cols: self.cols,
            entries: self.rows().map(|row| row.iter().map(BigInt::to_string).collect()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = MatrixWire::deserialize(deserializer)?;
        IntMatrix::from_wire(wire).map_err(serde::de::Error::custom)
    }
}
