//! Dense complex linear algebra for small dimensions.

mod eigen;
mod matrix;

pub use eigen::{
    hermitian_eig, trace_norm_hermitian, von_neumann_entropy, HermitianEigen, DEFAULT_TOL,
};
pub use matrix::{c64, ComplexMatrix, TensorFactor};
