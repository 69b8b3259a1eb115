//! The two causal architectures and their one-step block maps.
//!
//! A step couples a hidden transition expectation E_H (hidden -> hidden pair)
//! with an emission expectation E_HO (hidden -> hidden (x) output). The
//! emission-then-transition wiring is
//!
//!   F_{a,b}(X) = E_H( E_HO(a (x) b) (x) X ),
//!
//! while the transition-then-emission wiring is
//!
//!   G_{a,b}(X) = E_HO( E_H(a (x) X) (x) b ).
//!
//! Cylinder expectations compose these maps in the Heisenberg picture, which
//! is the ground truth for every probability computed here; the dual-map
//! formulas are provided as cross-checks, not as the evaluation path.
//!
//! The block functions accept arbitrary operators for `a`, `b`, `x` (the
//! equivalence analysis needs general Hermitian observables); probabilities
//! go through [`EffectSequence`], whose entries are validated effects.

use num_complex::Complex64;

use crate::channel::{DensityOperator, Effect, TransitionExpectation};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, TensorFactor};

/// How the per-step maps are wired in time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Architecture {
    /// Emission first, then the hidden transition.
    Conventional,
    /// Hidden transition first, then the emission.
    Causal,
}

impl Architecture {
    pub fn as_str(self) -> &'static str {
        match self {
            Architecture::Conventional => "conventional",
            Architecture::Causal => "causal",
        }
    }
}

/// One time step: hidden transition plus emission, sharing the hidden dimension.
#[derive(Debug, Clone)]
pub struct HQMMStep {
    hidden: TransitionExpectation,
    emission: TransitionExpectation,
}

impl HQMMStep {
    pub fn new(hidden: TransitionExpectation, emission: TransitionExpectation) -> Result<Self> {
        if hidden.dim_a() != hidden.dim_b() {
            return Err(Error::DimensionMismatch {
                context: "HQMMStep::new hidden map",
                expected: "equal retained/emitted hidden dimensions".to_string(),
                actual: format!("{}x{}", hidden.dim_a(), hidden.dim_b()),
            });
        }
        if emission.dim_a() != hidden.dim_a() {
            return Err(Error::DimensionMismatch {
                context: "HQMMStep::new emission map",
                expected: format!("hidden dimension {}", hidden.dim_a()),
                actual: emission.dim_a().to_string(),
            });
        }
        Ok(Self { hidden, emission })
    }

    pub fn hidden(&self) -> &TransitionExpectation {
        &self.hidden
    }

    pub fn emission(&self) -> &TransitionExpectation {
        &self.emission
    }

    /// Hidden dimension N.
    pub fn hidden_dim(&self) -> usize {
        self.hidden.dim_a()
    }

    /// Output dimension M.
    pub fn output_dim(&self) -> usize {
        self.emission.dim_b()
    }
}

/// Initial hidden state plus a per-time sequence of steps and a wiring tag.
#[derive(Debug, Clone)]
pub struct HQMMModel {
    initial_state: DensityOperator,
    steps: Vec<HQMMStep>,
    architecture: Architecture,
}

impl HQMMModel {
    pub fn new(
        initial_state: DensityOperator,
        steps: Vec<HQMMStep>,
        architecture: Architecture,
    ) -> Result<Self> {
        let first = steps.first().ok_or(Error::EmptyModel)?;
        let (n, m) = (first.hidden_dim(), first.output_dim());
        for (idx, step) in steps.iter().enumerate() {
            if step.hidden_dim() != n || step.output_dim() != m {
                return Err(Error::DimensionMismatch {
                    context: "HQMMModel::new step dimensions",
                    expected: format!("N={n}, M={m}"),
                    actual: format!(
                        "step {idx}: N={}, M={}",
                        step.hidden_dim(),
                        step.output_dim()
                    ),
                });
            }
        }
        if initial_state.dim() != n {
            return Err(Error::DimensionMismatch {
                context: "HQMMModel::new initial state",
                expected: format!("side {n}"),
                actual: format!("side {}", initial_state.dim()),
            });
        }
        Ok(Self {
            initial_state,
            steps,
            architecture,
        })
    }

    /// Time-homogeneous model: the same step repeated `count` times.
    pub fn homogeneous(
        initial_state: DensityOperator,
        step: HQMMStep,
        count: usize,
        architecture: Architecture,
    ) -> Result<Self> {
        Self::new(initial_state, vec![step; count.max(1)], architecture)
    }

    pub fn initial_state(&self) -> &DensityOperator {
        &self.initial_state
    }

    pub fn steps(&self) -> &[HQMMStep] {
        &self.steps
    }

    pub fn architecture(&self) -> Architecture {
        self.architecture
    }

    pub fn hidden_dim(&self) -> usize {
        self.steps[0].hidden_dim()
    }

    pub fn output_dim(&self) -> usize {
        self.steps[0].output_dim()
    }
}

/// Per-step pairs of (hidden effect, output effect).
#[derive(Debug, Clone)]
pub struct EffectSequence {
    pairs: Vec<(Effect, Effect)>,
}

impl EffectSequence {
    pub fn new(pairs: Vec<(Effect, Effect)>) -> Self {
        Self { pairs }
    }

    /// All-identity effects for `len` steps.
    pub fn identities(len: usize, hidden_dim: usize, output_dim: usize) -> Self {
        Self {
            pairs: (0..len)
                .map(|_| (Effect::identity(hidden_dim), Effect::identity(output_dim)))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(Effect, Effect)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn check_block_inputs(
    step: &HQMMStep,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    x: &ComplexMatrix,
) -> Result<()> {
    let n = step.hidden_dim();
    let m = step.output_dim();
    for (label, mat, side) in [("hidden observable", a, n), ("output observable", b, m), ("next-step observable", x, n)] {
        if mat.rows() != side || mat.cols() != side {
            return Err(Error::DimensionMismatch {
                context: "block map",
                expected: format!("{label} of side {side}"),
                actual: format!("{}x{}", mat.rows(), mat.cols()),
            });
        }
    }
    Ok(())
}

/// F_{a,b}(x) = E_H( E_HO(a (x) b) (x) x ).
pub fn conventional_block(
    step: &HQMMStep,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    x: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    check_block_inputs(step, a, b, x)?;
    let emitted = step.emission().apply_heisenberg(&a.kron(b))?;
    step.hidden().apply_heisenberg(&emitted.kron(x))
}

/// G_{a,b}(x) = E_HO( E_H(a (x) x) (x) b ).
pub fn causal_block(
    step: &HQMMStep,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    x: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    check_block_inputs(step, a, b, x)?;
    let advanced = step.hidden().apply_heisenberg(&a.kron(x))?;
    step.emission().apply_heisenberg(&advanced.kron(b))
}

/// Dispatch on the wiring tag.
pub fn block_apply(
    step: &HQMMStep,
    architecture: Architecture,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    x: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    match architecture {
        Architecture::Conventional => conventional_block(step, a, b, x),
        Architecture::Causal => causal_block(step, a, b, x),
    }
}

/// A linear map on operators, stored as a matrix acting on row-major
/// vectorisations: column index (k * dim_in + l) carries the coefficient of
/// X[k, l].
#[derive(Debug, Clone)]
pub struct Superoperator {
    dim_in: usize,
    dim_out: usize,
    matrix: ComplexMatrix,
}

impl Superoperator {
    /// Probe a linear map on all matrix units.
    pub fn from_map(
        dim_in: usize,
        dim_out: usize,
        mut map: impl FnMut(&ComplexMatrix) -> Result<ComplexMatrix>,
    ) -> Result<Self> {
        let mut columns: Vec<ComplexMatrix> = Vec::with_capacity(dim_in * dim_in);
        for k in 0..dim_in {
            for l in 0..dim_in {
                let image = map(&ComplexMatrix::matrix_unit(dim_in, k, l))?;
                if image.rows() != dim_out || image.cols() != dim_out {
                    return Err(Error::DimensionMismatch {
                        context: "Superoperator::from_map",
                        expected: format!("{0}x{0}", dim_out),
                        actual: format!("{}x{}", image.rows(), image.cols()),
                    });
                }
                columns.push(image);
            }
        }
        let matrix = ComplexMatrix::from_fn(dim_out * dim_out, dim_in * dim_in, |r, c| {
            let (i, j) = (r / dim_out, r % dim_out);
            columns[c].get(i, j)
        });
        Ok(Self {
            dim_in,
            dim_out,
            matrix,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.rows() != self.dim_in || x.cols() != self.dim_in {
            return Err(Error::DimensionMismatch {
                context: "Superoperator::apply",
                expected: format!("{0}x{0}", self.dim_in),
                actual: format!("{}x{}", x.rows(), x.cols()),
            });
        }
        let dout = self.dim_out;
        Ok(ComplexMatrix::from_fn(dout, dout, |i, j| {
            let row = i * dout + j;
            let mut acc = Complex64::ZERO;
            for k in 0..self.dim_in {
                for l in 0..self.dim_in {
                    acc += self.matrix.get(row, k * self.dim_in + l) * x.get(k, l);
                }
            }
            acc
        }))
    }

    /// Choi operator of this map on H_in (x) H_out, with unnormalised |Omega>.
    pub fn choi(&self) -> Result<ComplexMatrix> {
        let din = self.dim_in;
        let dout = self.dim_out;
        let side = din * dout;
        let mut blocks: Vec<ComplexMatrix> = Vec::with_capacity(din * din);
        for i in 0..din {
            for j in 0..din {
                blocks.push(self.apply(&ComplexMatrix::matrix_unit(din, i, j))?);
            }
        }
        Ok(ComplexMatrix::from_fn(side, side, |r, c| {
            let (i, k) = (r / dout, r % dout);
            let (j, l) = (c / dout, c % dout);
            blocks[i * din + j].get(k, l)
        }))
    }
}

/// The map x |-> F_{a,b}(x) or x |-> G_{a,b}(x) as a superoperator on the
/// next-step hidden leg.
pub fn block_superoperator(
    step: &HQMMStep,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    architecture: Architecture,
) -> Result<Superoperator> {
    let n = step.hidden_dim();
    Superoperator::from_map(n, n, |x| block_apply(step, architecture, a, b, x))
}

/// Hilbert-Schmidt adjoint: the unique map S* with Tr(S*(rho) X) = Tr(rho S(X))
/// for all rho, X under the bilinear trace pairing.
pub fn canonical_dual(s: &Superoperator) -> Superoperator {
    let din = s.dim_in;
    let dout = s.dim_out;
    // Tr(rho S(X)) = sum_{i,j,k,l} rho[i,j] S[(j,i),(k,l)] X[k,l]
    //             = sum_{k,l} S*(rho)[l,k] X[k,l],
    // so S*[(l,k),(i,j)] = S[(j,i),(k,l)].
    let matrix = ComplexMatrix::from_fn(din * din, dout * dout, |r, c| {
        let (l, k) = (r / din, r % din);
        let (i, j) = (c / dout, c % dout);
        s.matrix.get(j * dout + i, k * din + l)
    });
    Superoperator {
        dim_in: dout,
        dim_out: din,
        matrix,
    }
}

/// Dual of the conventional block evaluated through its displayed Kraus form:
/// sum_alpha Tr_first[ K_H,alpha rho K_H,alpha* (E_HO(a (x) b) (x) I) ].
/// Output lives on the next-step hidden leg (side N).
pub fn lemma_dual_conventional(
    step: &HQMMStep,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rho: &DensityOperator,
) -> Result<ComplexMatrix> {
    let n = step.hidden_dim();
    if rho.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "lemma_dual_conventional",
            expected: format!("state of side {n}"),
            actual: format!("side {}", rho.dim()),
        });
    }
    check_block_inputs(step, a, b, &ComplexMatrix::identity(n))?;
    let emitted = step.emission().apply_heisenberg(&a.kron(b))?;
    let sandwich = emitted.kron(&ComplexMatrix::identity(n));
    let mut acc = ComplexMatrix::zeros(n, n);
    for k in step.hidden().kraus().operators() {
        let term = k
            .matmul(rho.matrix())
            .matmul(&k.adjoint())
            .matmul(&sandwich)
            .partial_trace(n, n, TensorFactor::First)?;
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Dual of the causal block through its displayed Kraus form:
/// sum_beta Tr_first[ K_HO,beta rho K_HO,beta* (E_H(a (x) I) (x) b) ].
/// As printed, the output lives on the output register (side M).
pub fn lemma_dual_causal(
    step: &HQMMStep,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rho: &DensityOperator,
) -> Result<ComplexMatrix> {
    let n = step.hidden_dim();
    let m = step.output_dim();
    if rho.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "lemma_dual_causal",
            expected: format!("state of side {n}"),
            actual: format!("side {}", rho.dim()),
        });
    }
    check_block_inputs(step, a, b, &ComplexMatrix::identity(n))?;
    let advanced = step
        .hidden()
        .apply_heisenberg(&a.kron(&ComplexMatrix::identity(n)))?;
    let sandwich = advanced.kron(b);
    let mut acc = ComplexMatrix::zeros(m, m);
    for k in step.emission().kraus().operators() {
        let term = k
            .matmul(rho.matrix())
            .matmul(&k.adjoint())
            .matmul(&sandwich)
            .partial_trace(n, m, TensorFactor::First)?;
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Nested Heisenberg composition of the per-step block maps, paired with the
/// initial state. Effects beyond the evaluated horizon are implicitly
/// identity, so only `effects.len()` steps enter the product.
pub fn cylinder_expectation(model: &HQMMModel, effects: &EffectSequence) -> Result<f64> {
    cylinder_with(
        model.initial_state(),
        model.steps(),
        effects,
        model.architecture(),
    )
}

fn cylinder_with(
    initial: &DensityOperator,
    steps: &[HQMMStep],
    effects: &EffectSequence,
    architecture: Architecture,
) -> Result<f64> {
    if effects.len() > steps.len() {
        return Err(Error::LengthMismatch {
            context: "cylinder_expectation",
            expected: steps.len(),
            actual: effects.len(),
        });
    }
    let n = steps
        .first()
        .map(HQMMStep::hidden_dim)
        .ok_or(Error::EmptyModel)?;
    let mut x = ComplexMatrix::identity(n);
    for (step, (a, b)) in steps
        .iter()
        .zip(effects.pairs())
        .take(effects.len())
        .rev()
    {
        x = block_apply(step, architecture, a.matrix(), b.matrix(), &x)?;
    }
    let value = initial.matrix().matmul(&x).trace();
    Ok(value.re)
}

/// Evaluate the same inputs under both wirings.
/// Returns (conventional, causal, absolute difference).
pub fn compare_architectures(
    initial: &DensityOperator,
    steps: &[HQMMStep],
    effects: &EffectSequence,
) -> Result<(f64, f64, f64)> {
    let conv = cylinder_with(initial, steps, effects, Architecture::Conventional)?;
    let caus = cylinder_with(initial, steps, effects, Architecture::Causal)?;
    Ok((conv, caus, (conv - caus).abs()))
}
