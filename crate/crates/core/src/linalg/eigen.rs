//! Hermitian eigendecomposition by cyclic complex Jacobi rotations, plus the
//! spectral functions built on it (trace norm, von Neumann entropy).
//!
//! Jacobi is chosen over Householder/QR because every matrix in this crate has
//! side <= 16 and the rotation sweep order is deterministic, which makes runs
//! bit-reproducible across platforms.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::{c64, ComplexMatrix};

/// Default tolerance for Hermiticity, positivity and normalisation checks.
pub const DEFAULT_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) and orthonormal eigenvector columns of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigen {
    /// Reassemble V diag(lambda) V*.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| v.get(i, k) * self.eigenvalues[k] * v.get(j, k).conj())
                .sum()
        })
    }
}

fn off_diagonal_mass(a: &[Vec<Complex64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                sum += z.norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Diagonalise a Hermitian matrix.
///
/// The input is symmetrised as (A + A*)/2 before iterating; inputs whose
/// asymmetry exceeds `tol` are rejected. Sweeps run over pairs (p, q) in a
/// fixed row-major order until the off-diagonal Frobenius mass drops below
/// `tol` (relative to the matrix scale). Eigenvalues come back ascending with
/// matching eigenvector columns; no ordering is promised inside degenerate
/// clusters.
pub fn hermitian_eig(a: &ComplexMatrix, tol: f64) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            context: "hermitian_eig",
            expected: "square matrix".to_string(),
            actual: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let asymmetry = a.asymmetry_norm();
    if asymmetry > tol {
        return Err(Error::NotHermitian { asymmetry, tol });
    }
    let n = a.rows();
    let sym = a.hermitian_part();

    // Working copies as nested rows: the rotations touch two rows/columns at a time.
    let mut m: Vec<Vec<Complex64>> = (0..n)
        .map(|i| (0..n).map(|j| sym.get(i, j)).collect())
        .collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Complex64::ONE } else { Complex64::ZERO })
                .collect()
        })
        .collect();

    let scale = sym.frobenius_norm().max(1.0);
    // Sweep down to machine precision; `tol` only gates the failure report.
    let target = scale * f64::EPSILON * (n as f64).max(1.0);

    for _sweep in 0..MAX_SWEEPS {
        if off_diagonal_mass(&m) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p][q];
                let mag = apq.norm();
                if mag <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = m[p][p].re;
                let aqq = m[q][q].re;
                // Phase factor pulling the pivot onto the real axis, then a
                // real Jacobi rotation choosing the smaller angle.
                let phase = apq / mag;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let cos = 1.0 / (1.0 + t * t).sqrt();
                let sin = t * cos;

                // Unitary R: R[p][p] = c, R[p][q] = s, R[q][p] = -s conj(phase), R[q][q] = c conj(phase).
                let rqp = -sin * phase.conj();
                let rqq = cos * phase.conj();

                // M <- R* M R: columns first, then rows.
                for row in m.iter_mut() {
                    let mkp = row[p];
                    let mkq = row[q];
                    row[p] = mkp * cos + mkq * rqp;
                    row[q] = mkp * sin + mkq * rqq;
                }
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = mpk * cos + mqk * rqp.conj();
                    m[q][k] = mpk * sin + mqk * rqq.conj();
                }
                // Pin what the rotation made exact.
                m[p][q] = Complex64::ZERO;
                m[q][p] = Complex64::ZERO;
                m[p][p] = c64(m[p][p].re, 0.0);
                m[q][q] = c64(m[q][q].re, 0.0);

                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = vkp * cos + vkq * rqp;
                    v[k][q] = vkp * sin + vkq * rqq;
                }
            }
        }
    }
    let residual_mass = off_diagonal_mass(&m);
    if residual_mass > tol * scale {
        return Err(Error::EigenNoConvergence {
            off_diagonal: residual_mass,
            sweeps: MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].re.partial_cmp(&m[j][j].re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[i][i].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[i][order[j]]);

    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
///
/// Absolute values are accumulated in ascending order, which keeps the sum
/// independent of the sign pattern of the spectrum (negating the input
/// reproduces the identical result bitwise).
pub fn trace_norm_hermitian(a: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eig(a, DEFAULT_TOL)?;
    let mut magnitudes: Vec<f64> = eig.eigenvalues.iter().map(|l| l.abs()).collect();
    magnitudes.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(magnitudes.iter().sum())
}

/// Von Neumann entropy -sum(lambda ln lambda) of a density operator, in nats.
///
/// Rejects inputs with an eigenvalue below `-tol` or a trace off 1 by more
/// than `tol`; eigenvalues below `tol` contribute nothing.
pub fn von_neumann_entropy(rho: &ComplexMatrix, tol: f64) -> Result<f64> {
    let eig = hermitian_eig(rho, tol)?;
    let trace: f64 = eig.eigenvalues.iter().sum();
    if (trace - 1.0).abs() > tol {
        return Err(Error::TraceNotOne { trace, tol });
    }
    let mut entropy = 0.0;
    for &lambda in &eig.eigenvalues {
        if lambda < -tol {
            return Err(Error::NegativeEigenvalue {
                eigenvalue: lambda,
                tol,
            });
        }
        if lambda > tol {
            entropy -= lambda * lambda.ln();
        }
    }
    // An eigenvalue of 1 + O(eps) can push the sum a few ulp below zero.
    Ok(entropy.max(0.0))
}
