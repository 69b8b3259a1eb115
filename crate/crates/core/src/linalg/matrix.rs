//! Dense complex matrices at small dimensions.
//!
//! Row-major storage with explicit row/column counts. Matrices are treated as
//! immutable values: every operation returns a fresh matrix. Dimensions in
//! this crate never exceed a few dozen, so all routines are plain dense loops.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Convenience constructor for a complex scalar.
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Which tensor factor an operation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorFactor {
    First,
    Second,
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major data, rejecting shape mismatches and non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                len: data.len(),
            });
        }
        for (idx, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteEntry {
                    row: idx / cols.max(1),
                    col: idx % cols.max(1),
                });
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Build entrywise from a closure. Used internally where inputs are already finite.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Complex64::ONE } else { Complex64::ZERO })
    }

    /// Diagonal matrix from real entries.
    pub fn diag(entries: &[f64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                c64(entries[i], 0.0)
            } else {
                Complex64::ZERO
            }
        })
    }

    /// Column vector |i> of dimension `dim`, as a dim x 1 matrix.
    pub fn basis_column(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        Ok(Self::from_fn(dim, 1, |i, _| {
            if i == index {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        }))
    }

    /// Rank-one projector |i><i| of side `dim`.
    pub fn basis_projector(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        Ok(Self::from_fn(dim, dim, |i, j| {
            if i == index && j == index {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        }))
    }

    /// Matrix unit |i><j| of side `dim`.
    pub fn matrix_unit(dim: usize, i: usize, j: usize) -> Self {
        Self::from_fn(dim, dim, |r, c| {
            if r == i && c == j {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix addition shape mismatch"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix subtraction shape mismatch"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut data = vec![Complex64::ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += aik * other.get(k, j);
                }
            }
        }
        Self {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Kronecker product: entry ((i*b.rows + k), (j*b.cols + l)) = a[i,j] * b[k,l].
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![Complex64::ZERO; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let aij = self.get(i, j);
                if aij == Complex64::ZERO {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let r = i * other.rows + k;
                        let c = j * other.cols + l;
                        data[r * cols + c] = aij * other.get(k, l);
                    }
                }
            }
        }
        Self { rows, cols, data }
    }

    /// Trace out one factor of a bipartite operator on a (dim_a * dim_b)-dimensional space.
    ///
    /// The first factor indexes the slow (most significant) part of the row index.
    pub fn partial_trace(
        &self,
        dim_a: usize,
        dim_b: usize,
        traced: TensorFactor,
    ) -> Result<Self> {
        let side = dim_a * dim_b;
        if !self.is_square() || self.rows != side {
            return Err(Error::DimensionMismatch {
                context: "partial_trace",
                expected: format!("{side}x{side}"),
                actual: format!("{}x{}", self.rows, self.cols),
            });
        }
        let out = match traced {
            TensorFactor::First => Self::from_fn(dim_b, dim_b, |j, jp| {
                (0..dim_a)
                    .map(|i| self.get(i * dim_b + j, i * dim_b + jp))
                    .sum()
            }),
            TensorFactor::Second => Self::from_fn(dim_a, dim_a, |i, ip| {
                (0..dim_b)
                    .map(|k| self.get(i * dim_b + k, ip * dim_b + k))
                    .sum()
            }),
        };
        Ok(out)
    }

    /// Largest entry magnitude. Used for all residual and agreement checks.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ||A - A*||_max; zero for Hermitian matrices.
    pub fn asymmetry_norm(&self) -> f64 {
        debug_assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// (A + A*)/2.
    pub fn hermitian_part(&self) -> Self {
        debug_assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }

    /// Inner product <self|other> for column vectors.
    pub fn vector_dot(&self, other: &Self) -> Complex64 {
        debug_assert!(self.cols == 1 && other.cols == 1 && self.rows == other.rows);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// |v><v| for a column vector.
    pub fn outer_with_self(&self) -> Self {
        debug_assert!(self.cols == 1);
        Self::from_fn(self.rows, self.rows, |i, j| {
            self.data[i] * self.data[j].conj()
        })
    }

    pub fn vector_norm(&self) -> f64 {
        debug_assert!(self.cols == 1);
        self.frobenius_norm()
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, other: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::add(self, other)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, other: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::sub(self, other)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, other: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(other)
    }
}
