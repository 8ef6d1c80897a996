//! Exact rational matrices and the finite-dimensional vector space backend.
//!
//! A morphism `m -> n` is an `n × m` matrix acting on column vectors. Tensor
//! is the Kronecker product with left-major lexicographic basis order:
//! basis vector `e_i ⊗ e_j` of `m ⊗ n` has index `i * n + j`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use thiserror::Error;

use super::{Duality, DualizablePair, SmcBackend};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: cannot compose a {left_rows}x{left_cols} matrix after a {right_rows}x{right_cols} matrix")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
}

/// A dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(MatrixError::Ragged {
                    row,
                    found: r.len(),
                    expected: cols,
                });
            }
        }
        let n = rows.len();
        Ok(Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer entries, for tests and examples.
    pub fn from_integers(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[BigRational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn scalar(value: BigRational) -> Self {
        Self {
            rows: 1,
            cols: 1,
            data: vec![value],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    /// The single entry of a `1×1` matrix.
    pub fn as_scalar(&self) -> Option<&BigRational> {
        (self.rows == 1 && self.cols == 1).then(|| &self.data[0])
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `self · rhs`; zero entries of `self` are skipped, which keeps
    /// permutation and Kronecker-with-identity factors cheap.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = &self.data[i1 * self.cols + j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = &rhs.data[i2 * rhs.cols + j2];
                        if !b.is_zero() {
                            out.data[(i1 * rhs.rows + i2) * cols + j1 * rhs.cols + j2] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Result<BigRational, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(MatrixError::NotInvertible)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.data[col * n + j] /= &p;
                inv.data[col * n + j] /= &p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let da = &factor * &a.data[col * n + j];
                    a.data[r * n + j] -= da;
                    let di = &factor * &inv.data[col * n + j];
                    inv.data[r * n + j] -= di;
                }
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<BigRational, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(BigRational::zero());
            };
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let factor = a.get(r, col) / &p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let d = &factor * &a.data[col * n + j];
                    a.data[r * n + j] -= d;
                }
            }
        }
        Ok(det)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        serde_json::json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }
}

/// `rows=<r>; cols=<c>; entries=[[..],..]` with entries as `p/q` or `n`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rows={}; cols={}; entries=[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Finite-dimensional rational vector spaces; objects are dimensions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MatrixBackend;

impl MatrixBackend {
    /// Dual basis pairing on `ℚ^n`: `ev(β^i ⊗ b_j) = δ_ij` and
    /// `coev(1) = Σ b_i ⊗ β^i`.
    pub fn standard_duality(&self, n: usize) -> Duality<MatrixBackend> {
        let ev = Matrix::from_fn(1, n * n, |_, c| indicator(c / n == c % n));
        let coev = Matrix::from_fn(n * n, 1, |r, _| indicator(r / n == r % n));
        Duality {
            object: n,
            dual: n,
            ev,
            coev,
        }
    }
}

fn indicator(b: bool) -> BigRational {
    if b {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

impl SmcBackend for MatrixBackend {
    type Object = usize;
    type Morphism = Matrix;
    type Error = MatrixError;

    fn unit(&self) -> usize {
        1
    }

    fn tensor_objects(&self, a: &usize, b: &usize) -> usize {
        a * b
    }

    fn domain(&self, f: &Matrix) -> usize {
        f.cols
    }

    fn codomain(&self, f: &Matrix) -> usize {
        f.rows
    }

    fn identity(&self, obj: &usize) -> Matrix {
        Matrix::identity(*obj)
    }

    fn compose(&self, f: &Matrix, g: &Matrix) -> Result<Matrix, MatrixError> {
        g.mul(f)
    }

    fn tensor(&self, f: &Matrix, g: &Matrix) -> Matrix {
        f.kron(g)
    }

    /// Perfect-shuffle permutation `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
    fn braiding(&self, a: &usize, b: &usize) -> Matrix {
        let (m, n) = (*a, *b);
        let mut p = Matrix::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                p.data[(j * m + i) * (m * n) + i * n + j] = BigRational::one();
            }
        }
        p
    }

    fn permute(&self, objects: &[usize], perm: &[usize]) -> Result<Matrix, MatrixError> {
        let k = objects.len();
        let mut out_dims = vec![0; k];
        for (i, &p) in perm.iter().enumerate() {
            out_dims[p] = objects[i];
        }
        let total: usize = objects.iter().product();
        let mut m = Matrix::zeros(total, total);
        let mut digits = vec![0usize; k];
        let mut out_digits = vec![0usize; k];
        for col in 0..total {
            let mut rest = col;
            for i in (0..k).rev() {
                digits[i] = rest % objects[i];
                rest /= objects[i];
            }
            for i in 0..k {
                out_digits[perm[i]] = digits[i];
            }
            let row = out_digits
                .iter()
                .zip(&out_dims)
                .fold(0, |acc, (&d, &n)| acc * n + d);
            m.data[row * total + col] = BigRational::one();
        }
        Ok(m)
    }
}

/// Duality pair on `ℚ^n` for a square invertible matrix, with the standard
/// pairing as duality data.
pub fn dualizable_from_matrix(f: &Matrix) -> Result<DualizablePair<MatrixBackend>, MatrixError> {
    if !f.is_square() {
        return Err(MatrixError::NotSquare {
            rows: f.rows,
            cols: f.cols,
        });
    }
    let inv = f.inverse()?;
    Ok(DualizablePair {
        duality: MatrixBackend.standard_duality(f.rows),
        auto: f.clone(),
        auto_inv: inv,
    })
}

/// Parse `n` or `p/q` with integer `p`, `q` and `q ≠ 0`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let t = s.trim();
    let int = |part: &str| {
        let ok = !part.is_empty()
            && part
                .strip_prefix('-')
                .unwrap_or(part)
                .chars()
                .all(|c| c.is_ascii_digit())
            && part != "-";
        if ok {
            BigInt::from_str(part).map_err(|_| format!("`{s}` is not a rational"))
        } else {
            Err(format!("`{s}` is not an integer or a fraction p/q"))
        }
    };
    match t.split_once('/') {
        None => Ok(BigRational::from_integer(int(t)?)),
        Some((p, q)) => {
            let (p, q) = (int(p.trim())?, int(q.trim())?);
            if q.is_zero() {
                return Err(format!("`{s}` has zero denominator"));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

#[derive(Debug, Error)]
pub enum MatrixFileError {
    #[error("matrix file: {0}")]
    Syntax(serde_json::Error),
    #[error("matrix file: expected {dim} rows of {dim} entries, {found}")]
    Shape { dim: usize, found: String },
}

impl From<serde_json::Error> for MatrixFileError {
    fn from(e: serde_json::Error) -> Self {
        MatrixFileError::Syntax(e)
    }
}

struct RationalEntry(BigRational);

impl<'de> Deserialize<'de> for RationalEntry {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntryVisitor;

        impl<'de> Visitor<'de> for EntryVisitor {
            type Value = RationalEntry;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational written as \"p/q\" or \"n\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<RationalEntry, E> {
                parse_rational(v).map(RationalEntry).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RationalEntry, E> {
                Ok(RationalEntry(BigRational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RationalEntry, E> {
                Ok(RationalEntry(BigRational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<RationalEntry, E> {
                Err(E::custom(format!("non-integer number {v}; write it as \"p/q\"")))
            }
        }

        deserializer.deserialize_any(EntryVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    dim: usize,
    entries: Vec<Vec<RationalEntry>>,
}

/// Read `{"dim": n, "entries": [[...], ...]}` into a square matrix.
pub fn parse_matrix_file(text: &str) -> Result<Matrix, MatrixFileError> {
    let file: MatrixFile = serde_json::from_str(text)?;
    let dim = file.dim;
    if file.entries.len() != dim {
        return Err(MatrixFileError::Shape {
            dim,
            found: format!("found {} rows", file.entries.len()),
        });
    }
    if let Some((i, row)) = file.entries.iter().enumerate().find(|(_, r)| r.len() != dim) {
        return Err(MatrixFileError::Shape {
            dim,
            found: format!("row {i} has {} entries", row.len()),
        });
    }
    let rows = file
        .entries
        .into_iter()
        .map(|r| r.into_iter().map(|e| e.0).collect())
        .collect();
    Ok(Matrix::from_rows(rows).expect("rows checked above"))
}
