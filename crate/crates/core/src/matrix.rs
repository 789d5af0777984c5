//! Integer matrices modulo a global sign.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::{Overflow, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("malformed matrix JSON: {0}")]
    Json(String),
}

/// A matrix in `PM_{r x c}(Z)`: an integer matrix taken up to multiplication
/// by `-1`.
///
/// The stored representative is canonical: the first nonzero entry in
/// row-major order is positive. Equality of values is therefore plain
/// structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> ProjMatrix<T> {
    /// Builds the sign class of the given row-major data.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, MatrixError> {
        if rows * cols != data.len() {
            return Err(MatrixError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let mut m = Self { rows, cols, data };
        m.canonicalize()?;
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Column vector `[v_1, ..., v_k]^T` up to sign.
    pub fn column(entries: Vec<T>) -> Result<Self, MatrixError> {
        let k = entries.len();
        Self::new(k, 1, entries)
    }

    /// Convenience constructor from `i64` rows; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut data = vec![T::zero(); k * k];
        for i in 0..k {
            data[i * k + i] = T::one();
        }
        Self { rows: k, cols: k, data }
    }

    fn canonicalize(&mut self) -> Result<(), Overflow> {
        if let Some(first) = self.data.iter().find(|v| !v.is_zero()) {
            if first.is_negative() {
                for v in &mut self.data {
                    *v = v.neg_c()?;
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Canonical representative entry at `(r, c)`, zero-based.
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Column `c` as its own sign class.
    pub fn column_class(&self, c: usize) -> Self {
        let entries = (0..self.rows).map(|r| self.get(r, c).clone()).collect();
        Self::column(entries).expect("shape is consistent")
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// For a `2 x 2^n` matrix, the hole count `n`.
    pub fn hole_count(&self) -> Option<u32> {
        (self.rows == 2 && self.cols.is_power_of_two()).then(|| self.cols.trailing_zeros())
    }

    /// Product of sign classes; well defined because `[A][B] = [AB]`.
    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add_c(&a.mul_c(b)?)?;
                }
                data.push(acc);
            }
        }
        Self::new(self.rows, other.cols, data)
    }

    /// `ad - bc`, independent of the representative.
    pub fn det2(&self) -> Result<T, MatrixError> {
        if self.shape() != (2, 2) {
            return Err(MatrixError::Shape(format!(
                "determinant needs 2x2, got {}x{}",
                self.rows, self.cols
            )));
        }
        let ad = self.get(0, 0).mul_c(self.get(1, 1))?;
        let bc = self.get(0, 1).mul_c(self.get(1, 0))?;
        Ok(ad.sub_c(&bc)?)
    }

    /// Converts entries to another scalar type.
    pub fn convert<U: Scalar>(&self) -> Result<ProjMatrix<U>, Overflow> {
        let data = self
            .data
            .iter()
            .map(|v| v.to_i128().and_then(U::from_i128).ok_or(Overflow))
            .collect::<Result<_, _>>()?;
        Ok(ProjMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: u32,
    rows: Vec<Vec<i64>>,
}

impl ProjMatrix<i64> {
    /// `{"n": n, "rows": [[...], [...]]}` for a `2 x 2^n` matrix.
    pub fn to_json(&self) -> Result<String, MatrixError> {
        let n = self
            .hole_count()
            .ok_or_else(|| MatrixError::Shape(format!("{}x{} is not 2x2^n", self.rows, self.cols)))?;
        serde_json::to_string(&MatrixJson {
            n,
            rows: self.to_rows(),
        })
        .map_err(|e| MatrixError::Json(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self, MatrixError> {
        let parsed: MatrixJson = serde_json::from_str(text).map_err(|e| MatrixError::Json(e.to_string()))?;
        let expected = 1usize
            .checked_shl(parsed.n)
            .ok_or_else(|| MatrixError::Json(format!("n = {} is too large", parsed.n)))?;
        if parsed.rows.len() != 2 || parsed.rows.iter().any(|r| r.len() != expected) {
            return Err(MatrixError::Json(format!(
                "expected 2 rows of {expected} entries for n = {}",
                parsed.n
            )));
        }
        Self::from_rows(parsed.rows)
    }
}

impl<T: Scalar> fmt::Debug for ProjMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[[a,b],[c,d]]`, rows of the canonical representative.
impl<T: Scalar> fmt::Display for ProjMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (i, v) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
