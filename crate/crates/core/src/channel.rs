//! States, effects, and completely positive maps in Kraus form.
//!
//! Transition expectations are the Heisenberg-picture building blocks: unital
//! CP maps B(H_A (x) H_B) -> B(H_A) written as X |-> sum_i V_i* X V_i with
//! V_i : H_A -> H_A (x) H_B. The Schroedinger dual rho |-> sum_i V_i rho V_i*
//! shares the same Kraus family. Tensor legs are ordered (A, B) throughout.


use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix, TensorFactor, DEFAULT_TOL};

/// A yes-no measurement operator e with 0 <= e <= I.
#[derive(Debug, Clone)]
pub struct Effect {
    matrix: ComplexMatrix,
}

impl Effect {
    /// Validate Hermiticity and the operator interval [0, I].
    pub fn new(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                context: "Effect::new",
                expected: "square matrix".to_string(),
                actual: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        let eig = hermitian_eig(&matrix, tol)?;
        for &lambda in &eig.eigenvalues {
            if lambda < -tol || lambda > 1.0 + tol {
                return Err(Error::EffectBoundViolated {
                    eigenvalue: lambda,
                    tol,
                });
            }
        }
        Ok(Self { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim),
        }
    }

    /// The projector |i><i|.
    pub fn basis_projector(dim: usize, index: usize) -> Result<Self> {
        Ok(Self {
            matrix: ComplexMatrix::basis_projector(dim, index)?,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Positive semidefinite trace-one operator.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
}

impl DensityOperator {
    pub fn new(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                context: "DensityOperator::new",
                expected: "square matrix".to_string(),
                actual: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        let eig = hermitian_eig(&matrix, tol)?;
        if let Some(&lambda) = eig
            .eigenvalues
            .iter()
            .find(|&&lambda| lambda < -tol)
        {
            return Err(Error::NegativeEigenvalue {
                eigenvalue: lambda,
                tol,
            });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol {
            return Err(Error::TraceNotOne { trace, tol });
        }
        Ok(Self { matrix })
    }

    /// |v><v| for a unit column vector.
    pub fn pure_state(v: &ComplexMatrix, tol: f64) -> Result<Self> {
        Self::new(v.outer_with_self(), tol)
    }

    pub fn basis_state(dim: usize, index: usize) -> Result<Self> {
        Ok(Self {
            matrix: ComplexMatrix::basis_projector(dim, index)?,
        })
    }

    /// Diagonal density operator from a probability vector (assumed validated).
    pub fn from_distribution(p: &[f64], tol: f64) -> Result<Self> {
        Self::new(ComplexMatrix::diag(p), tol)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Ordered Kraus family for a CP map between spaces of dimension
/// `dim_in` and `dim_out`; every operator is `dim_out` x `dim_in`.
///
/// The Schroedinger action is rho |-> sum_i K_i rho K_i*; the Heisenberg
/// action (on observables of side `dim_out`) is X |-> sum_i K_i* X K_i.
#[derive(Debug, Clone)]
pub struct KrausMap {
    dim_in: usize,
    dim_out: usize,
    ops: Vec<ComplexMatrix>,
}

impl KrausMap {
    pub fn new(dim_in: usize, dim_out: usize, ops: Vec<ComplexMatrix>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::EmptyKrausList);
        }
        for op in &ops {
            if op.rows() != dim_out || op.cols() != dim_in {
                return Err(Error::DimensionMismatch {
                    context: "KrausMap::new",
                    expected: format!("{dim_out}x{dim_in}"),
                    actual: format!("{}x{}", op.rows(), op.cols()),
                });
            }
        }
        Ok(Self {
            dim_in,
            dim_out,
            ops,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// Kraus rank as stored (no minimality claim).
    pub fn rank(&self) -> usize {
        self.ops.len()
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    /// sum_i K_i* K_i, the completeness operator on the input space.
    pub fn completeness_operator(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.dim_in, self.dim_in);
        for op in &self.ops {
            acc = acc.add(&op.adjoint().matmul(op));
        }
        acc
    }

    /// ||sum_i K_i* K_i - I||_max.
    pub fn completeness_residual(&self) -> f64 {
        self.completeness_operator()
            .max_abs_diff(&ComplexMatrix::identity(self.dim_in))
    }

    /// Trace preservation of the Schroedinger action (equivalently unitality
    /// of the Heisenberg action).
    pub fn is_trace_preserving(&self, tol: f64) -> bool {
        self.completeness_residual() <= tol
    }

    /// Schroedinger action sum_i K_i X K_i* on an arbitrary operator.
    pub fn apply_schrodinger_raw(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.rows() != self.dim_in || x.cols() != self.dim_in {
            return Err(Error::DimensionMismatch {
                context: "KrausMap::apply_schrodinger_raw",
                expected: format!("{0}x{0}", self.dim_in),
                actual: format!("{}x{}", x.rows(), x.cols()),
            });
        }
        let mut acc = ComplexMatrix::zeros(self.dim_out, self.dim_out);
        for op in &self.ops {
            acc = acc.add(&op.matmul(x).matmul(&op.adjoint()));
        }
        Ok(acc)
    }

    /// Heisenberg action sum_i K_i* X K_i on an arbitrary operator.
    pub fn apply_heisenberg_raw(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.rows() != self.dim_out || x.cols() != self.dim_out {
            return Err(Error::DimensionMismatch {
                context: "KrausMap::apply_heisenberg_raw",
                expected: format!("{0}x{0}", self.dim_out),
                actual: format!("{}x{}", x.rows(), x.cols()),
            });
        }
        let mut acc = ComplexMatrix::zeros(self.dim_in, self.dim_in);
        for op in &self.ops {
            acc = acc.add(&op.adjoint().matmul(x).matmul(op));
        }
        Ok(acc)
    }
}

/// True iff the Heisenberg action of the family is unital within `tol`.
pub fn check_unital(map: &KrausMap, tol: f64) -> bool {
    map.is_trace_preserving(tol)
}

/// Choi operator (id (x) Phi)(|Omega><Omega|) of the Schroedinger action,
/// with the unnormalised |Omega> = sum_i |i,i>. The result lives on
/// H_in (x) H_out and has side dim_in * dim_out; its trace is dim_in for a
/// trace-preserving map.
pub fn choi(map: &KrausMap) -> ComplexMatrix {
    let din = map.dim_in;
    let dout = map.dim_out;
    let side = din * dout;
    let mut acc = ComplexMatrix::zeros(side, side);
    for op in &map.ops {
        // (I (x) K)|Omega> = sum_i |i> (x) K|i>, i.e. column i of K stacked.
        let v = ComplexMatrix::from_fn(side, 1, |r, _| {
            let i = r / dout;
            let k = r % dout;
            op.get(k, i)
        });
        acc = acc.add(&v.outer_with_self());
    }
    acc
}

/// Unital CP map B(H_A (x) H_B) -> B(H_A) in Kraus form; `dim_a` is the
/// retained factor and `dim_b` the integrated-out one.
#[derive(Debug, Clone)]
pub struct TransitionExpectation {
    dim_a: usize,
    dim_b: usize,
    kraus: KrausMap,
}

impl TransitionExpectation {
    pub fn new(dim_a: usize, dim_b: usize, ops: Vec<ComplexMatrix>, tol: f64) -> Result<Self> {
        let kraus = KrausMap::new(dim_a, dim_a * dim_b, ops)?;
        let residual = kraus.completeness_residual();
        if residual > tol {
            return Err(Error::NotUnital { residual, tol });
        }
        Ok(Self { dim_a, dim_b, kraus })
    }

    /// Single-Kraus expectation X |-> V* X V from an isometry V : H_A -> H_A (x) H_B.
    pub fn from_isometry(v: ComplexMatrix, dim_a: usize, dim_b: usize, tol: f64) -> Result<Self> {
        if v.rows() != dim_a * dim_b || v.cols() != dim_a {
            return Err(Error::DimensionMismatch {
                context: "TransitionExpectation::from_isometry",
                expected: format!("{}x{}", dim_a * dim_b, dim_a),
                actual: format!("{}x{}", v.rows(), v.cols()),
            });
        }
        let residual = v
            .adjoint()
            .matmul(&v)
            .max_abs_diff(&ComplexMatrix::identity(dim_a));
        if residual > tol {
            return Err(Error::NotIsometry { residual, tol });
        }
        Ok(Self {
            dim_a,
            dim_b,
            kraus: KrausMap::new(dim_a, dim_a * dim_b, vec![v])?,
        })
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn kraus(&self) -> &KrausMap {
        &self.kraus
    }

    /// Heisenberg picture: X on H_A (x) H_B down to sum_i V_i* X V_i on H_A.
    pub fn apply_heisenberg(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.kraus.apply_heisenberg_raw(x)
    }

    /// Schroedinger picture: validated density in, validated density out.
    pub fn apply_schrodinger(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        let out = self.kraus.apply_schrodinger_raw(rho.matrix())?;
        DensityOperator::new(out, DEFAULT_TOL)
    }

    /// Schroedinger action on a raw operator (no density validation).
    pub fn apply_schrodinger_raw(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.kraus.apply_schrodinger_raw(x)
    }

    /// Marginal on the retained factor after the Schroedinger step.
    pub fn schrodinger_marginal_a(&self, rho: &DensityOperator) -> Result<ComplexMatrix> {
        self.kraus
            .apply_schrodinger_raw(rho.matrix())?
            .partial_trace(self.dim_a, self.dim_b, TensorFactor::Second)
    }
}

/// Build a validated effect from a raw matrix.
pub fn validate_effect(matrix: ComplexMatrix, tol: f64) -> Result<Effect> {
    Effect::new(matrix, tol)
}

/// Alias for the isometry constructor, mirroring its role as a free operation.
pub fn isometry_expectation(
    v: ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    tol: f64,
) -> Result<TransitionExpectation> {
    TransitionExpectation::from_isometry(v, dim_a, dim_b, tol)
}

/// |Tr(E_*(rho) X) - Tr(rho E(X))|, both sides evaluated independently.
pub fn duality_residual(
    expectation: &TransitionExpectation,
    rho: &DensityOperator,
    x: &ComplexMatrix,
) -> Result<f64> {
    let lhs_state = expectation.apply_schrodinger_raw(rho.matrix())?;
    let lhs = lhs_state.matmul(x).trace();
    let rhs = rho.matrix().matmul(&expectation.apply_heisenberg(x)?).trace();
    Ok((lhs - rhs).norm())
}
