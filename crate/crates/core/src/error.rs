use thiserror::Error;

/// Errors surfaced by validation and numeric routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("entry count {len} does not match {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("{context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: String,
        actual: String,
    },

    #[error("matrix is not Hermitian: asymmetry norm {asymmetry:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { asymmetry: f64, tol: f64 },

    #[error("effect eigenvalue {eigenvalue:.6e} outside [0, 1] (tolerance {tol:.3e})")]
    EffectBoundViolated { eigenvalue: f64, tol: f64 },

    #[error("density operator has negative eigenvalue {eigenvalue:.6e} (tolerance {tol:.3e})")]
    NegativeEigenvalue { eigenvalue: f64, tol: f64 },

    #[error("trace {trace:.12} deviates from 1 beyond tolerance {tol:.3e}")]
    TraceNotOne { trace: f64, tol: f64 },

    #[error("Kraus family is not unital: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotUnital { residual: f64, tol: f64 },

    #[error("operator is not an isometry: ||V*V - I|| = {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotIsometry { residual: f64, tol: f64 },

    #[error("{matrix} row {row} has negative entry {value:.6e}")]
    NegativeProbability {
        matrix: String,
        row: usize,
        value: f64,
    },

    #[error("{matrix} row {row} sums to {sum:.12}, expected 1")]
    RowSumInvalid {
        matrix: String,
        row: usize,
        sum: f64,
    },

    #[error("{context}: sequence length {actual} exceeds available {expected}")]
    LengthMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("eigensolver did not converge: off-diagonal mass {off_diagonal:.3e} after {sweeps} sweeps")]
    EigenNoConvergence { off_diagonal: f64, sweeps: usize },

    #[error("empty Kraus operator list")]
    EmptyKrausList,

    #[error("model has no steps")]
    EmptyModel,
}

pub type Result<T> = std::result::Result<T, Error>;
