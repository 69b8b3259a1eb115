//! Classical hidden Markov models and their isometric lifting.
//!
//! A transition matrix lifts to V|i> = sum_j sqrt(Pi_ij) |i,j> and an
//! emission kernel to V|j> = sum_k sqrt(Q_j(k)) |j, e_k>. Both isometries
//! keep each basis label inside its own subspace, which is what forces the
//! two block-map wirings to agree on every observable for lifted models.
//! Nonnegative square roots only; zero probabilities lift to exact zeros.

use num_complex::Complex64;

use crate::block::{
    causal_block, compare_architectures, conventional_block, Architecture, EffectSequence,
    HQMMModel, HQMMStep,
};
use crate::channel::{DensityOperator, Effect, TransitionExpectation};
use crate::error::{Error, Result};
use crate::linalg::{c64, ComplexMatrix};
use crate::sampling::random_hermitian;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Validated classical HMM: initial distribution plus per-step row-stochastic
/// transition and emission kernels.
#[derive(Debug, Clone)]
pub struct ClassicalHMM {
    initial: Vec<f64>,
    transitions: Vec<Vec<Vec<f64>>>,
    emissions: Vec<Vec<Vec<f64>>>,
}

fn validate_rows(
    name: &str,
    matrix: &[Vec<f64>],
    rows: usize,
    cols: usize,
    tol: f64,
) -> Result<()> {
    if matrix.len() != rows {
        return Err(Error::DimensionMismatch {
            context: "ClassicalHMM::new",
            expected: format!("{name} with {rows} rows"),
            actual: format!("{} rows", matrix.len()),
        });
    }
    for (r, row) in matrix.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::DimensionMismatch {
                context: "ClassicalHMM::new",
                expected: format!("{name} row {r} of length {cols}"),
                actual: format!("length {}", row.len()),
            });
        }
        let mut sum = 0.0;
        for &p in row {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::NegativeProbability {
                    matrix: name.to_string(),
                    row: r,
                    value: p,
                });
            }
            sum += p;
        }
        if (sum - 1.0).abs() > tol {
            return Err(Error::RowSumInvalid {
                matrix: name.to_string(),
                row: r,
                sum,
            });
        }
    }
    Ok(())
}

impl ClassicalHMM {
    pub fn new(
        initial: Vec<f64>,
        transitions: Vec<Vec<Vec<f64>>>,
        emissions: Vec<Vec<Vec<f64>>>,
        tol: f64,
    ) -> Result<Self> {
        let n = initial.len();
        if n == 0 || transitions.is_empty() || transitions.len() != emissions.len() {
            return Err(Error::DimensionMismatch {
                context: "ClassicalHMM::new",
                expected: "nonempty pi and equal-length transition/emission sequences".to_string(),
                actual: format!(
                    "pi len {}, {} transitions, {} emissions",
                    n,
                    transitions.len(),
                    emissions.len()
                ),
            });
        }
        validate_rows("initial distribution", &[initial.clone()], 1, n, tol)?;
        let m = emissions[0].first().map(Vec::len).unwrap_or(0);
        for (idx, pi) in transitions.iter().enumerate() {
            validate_rows(&format!("transition {idx}"), pi, n, n, tol)?;
        }
        for (idx, q) in emissions.iter().enumerate() {
            validate_rows(&format!("emission {idx}"), q, n, m, tol)?;
        }
        Ok(Self {
            initial,
            transitions,
            emissions,
        })
    }

    /// Homogeneous chain: one (transition, emission) pair repeated.
    pub fn homogeneous(
        initial: Vec<f64>,
        transition: Vec<Vec<f64>>,
        emission: Vec<Vec<f64>>,
        steps: usize,
        tol: f64,
    ) -> Result<Self> {
        Self::new(
            initial,
            vec![transition; steps.max(1)],
            vec![emission; steps.max(1)],
            tol,
        )
    }

    pub fn hidden_count(&self) -> usize {
        self.initial.len()
    }

    pub fn output_count(&self) -> usize {
        self.emissions[0][0].len()
    }

    pub fn step_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> &[f64] {
        &self.initial
    }

    pub fn transition(&self, n: usize) -> Result<&Vec<Vec<f64>>> {
        self.transitions.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            dim: self.transitions.len(),
        })
    }

    pub fn emission(&self, n: usize) -> Result<&Vec<Vec<f64>>> {
        self.emissions.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            dim: self.emissions.len(),
        })
    }

    /// Lifted step at time `n`.
    pub fn lifted_step(&self, n: usize) -> Result<HQMMStep> {
        let hidden = lift_transition(self.transition(n)?)?;
        let emission = lift_emission(self.emission(n)?)?;
        HQMMStep::new(hidden, emission)
    }

    /// Full lifted model with the diagonal embedding of pi as initial state.
    pub fn lifted_model(&self, architecture: Architecture) -> Result<HQMMModel> {
        let steps: Vec<HQMMStep> = (0..self.step_count())
            .map(|n| self.lifted_step(n))
            .collect::<Result<_>>()?;
        let initial = DensityOperator::from_distribution(&self.initial, 1e-9)?;
        HQMMModel::new(initial, steps, architecture)
    }
}

/// Validate a raw HMM description. Alias for the constructor.
pub fn validate_hmm(
    initial: Vec<f64>,
    transitions: Vec<Vec<Vec<f64>>>,
    emissions: Vec<Vec<Vec<f64>>>,
    tol: f64,
) -> Result<ClassicalHMM> {
    ClassicalHMM::new(initial, transitions, emissions, tol)
}

const LIFT_TOL: f64 = 1e-9;

/// V|i> = sum_j sqrt(Pi_ij)|i,j>, as a unital single-Kraus expectation.
pub fn lift_transition(pi: &[Vec<f64>]) -> Result<TransitionExpectation> {
    let n = pi.len();
    validate_rows("transition", pi, n, n, LIFT_TOL)?;
    let v = ComplexMatrix::from_fn(n * n, n, |r, col| {
        let (i, j) = (r / n, r % n);
        if i == col {
            c64(pi[i][j].sqrt(), 0.0)
        } else {
            Complex64::ZERO
        }
    });
    TransitionExpectation::from_isometry(v, n, n, LIFT_TOL)
}

/// V|j> = sum_k sqrt(Q_j(k)) |j> (x) |e_k>, as a unital single-Kraus expectation.
pub fn lift_emission(q: &[Vec<f64>]) -> Result<TransitionExpectation> {
    let n = q.len();
    let m = q.first().map(Vec::len).unwrap_or(0);
    validate_rows("emission", q, n, m, LIFT_TOL)?;
    let v = ComplexMatrix::from_fn(n * m, n, |r, col| {
        let (j, k) = (r / m, r % m);
        if j == col {
            c64(q[j][k].sqrt(), 0.0)
        } else {
            Complex64::ZERO
        }
    });
    TransitionExpectation::from_isometry(v, n, m, LIFT_TOL)
}

/// Diagonal observable given by per-basis weights.
#[derive(Debug, Clone)]
pub struct DiagonalObservable {
    weights: Vec<f64>,
}

impl DiagonalObservable {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFiniteEntry { row: 0, col: 0 });
        }
        Ok(Self { weights })
    }

    pub fn ones(len: usize) -> Self {
        Self {
            weights: vec![1.0; len],
        }
    }

    /// Indicator of a single basis label.
    pub fn indicator(len: usize, index: usize) -> Result<Self> {
        if index >= len {
            return Err(Error::IndexOutOfRange { index, dim: len });
        }
        let mut weights = vec![0.0; len];
        weights[index] = 1.0;
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::diag(&self.weights)
    }

    /// As a validated effect; requires weights in [0, 1].
    pub fn to_effect(&self, tol: f64) -> Result<Effect> {
        Effect::new(self.to_matrix(), tol)
    }
}

/// Matrix element <i| F_{a,b}(a_next) |j> of the lifted block map via the
/// closed-form product a[i,j] * B_ij * A_ij, where B_ij couples the emission
/// amplitudes to b and A_ij couples the transition amplitudes to a_next.
pub fn explicit_block_element(
    hmm: &ClassicalHMM,
    step: usize,
    i: usize,
    j: usize,
    a_n: &ComplexMatrix,
    b_n: &ComplexMatrix,
    a_next: &ComplexMatrix,
) -> Result<Complex64> {
    let n = hmm.hidden_count();
    let m = hmm.output_count();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, dim: n });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, dim: n });
    }
    for (label, mat, side) in [("a_n", a_n, n), ("b_n", b_n, m), ("a_next", a_next, n)] {
        if mat.rows() != side || mat.cols() != side {
            return Err(Error::DimensionMismatch {
                context: "explicit_block_element",
                expected: format!("{label} of side {side}"),
                actual: format!("{}x{}", mat.rows(), mat.cols()),
            });
        }
    }
    let q = hmm.emission(step)?;
    let pi = hmm.transition(step)?;

    let mut emission_factor = Complex64::ZERO; // B_ij
    for k in 0..m {
        for kp in 0..m {
            emission_factor += (q[i][k] * q[j][kp]).sqrt() * b_n.get(k, kp);
        }
    }
    let mut transition_factor = Complex64::ZERO; // A_ij
    for l in 0..n {
        for mm in 0..n {
            transition_factor += (pi[i][l] * pi[j][mm]).sqrt() * a_next.get(l, mm);
        }
    }
    Ok(a_n.get(i, j) * emission_factor * transition_factor)
}

/// Outcome of the randomized architecture-agreement check.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub trials: usize,
    pub seed: u64,
    /// max over trials of || F(a_next) - G(a_next) ||_max.
    pub max_block_deviation: f64,
    /// max over trials, entries of | block element - closed form |.
    pub max_explicit_deviation: f64,
}

impl EquivalenceReport {
    pub fn is_equivalent(&self, tol: f64) -> bool {
        self.max_block_deviation < tol && self.max_explicit_deviation < tol
    }
}

/// Randomized block-agreement maximum for an arbitrary step; used both for
/// lifted steps (agreement expected) and hand-built counterexamples.
pub fn equivalence_maximum_for_step(step: &HQMMStep, trials: usize, seed: u64) -> Result<f64> {
    let n = step.hidden_dim();
    let m = step.output_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_block = 0.0f64;
    for _ in 0..trials {
        let a = random_hermitian(&mut rng, n);
        let b = random_hermitian(&mut rng, m);
        let a_next = random_hermitian(&mut rng, n);
        let f = conventional_block(step, &a, &b, &a_next)?;
        let g = causal_block(step, &a, &b, &a_next)?;
        max_block = max_block.max(f.max_abs_diff(&g));
    }
    Ok(max_block)
}

/// Draw `trials` Hermitian observable triples, compare the two block maps on
/// the lifted step, and compare both against the closed-form matrix elements.
pub fn check_equivalence(
    hmm: &ClassicalHMM,
    step_index: usize,
    trials: usize,
    seed: u64,
) -> Result<EquivalenceReport> {
    let step = hmm.lifted_step(step_index)?;
    let n = hmm.hidden_count();
    let m = hmm.output_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_block = 0.0f64;
    let mut max_explicit = 0.0f64;
    for _ in 0..trials {
        let a = random_hermitian(&mut rng, n);
        let b = random_hermitian(&mut rng, m);
        let a_next = random_hermitian(&mut rng, n);
        let f = conventional_block(&step, &a, &b, &a_next)?;
        let g = causal_block(&step, &a, &b, &a_next)?;
        max_block = max_block.max(f.max_abs_diff(&g));
        for i in 0..n {
            for j in 0..n {
                let closed = explicit_block_element(hmm, step_index, i, j, &a, &b, &a_next)?;
                max_explicit = max_explicit.max((f.get(i, j) - closed).norm());
                max_explicit = max_explicit.max((g.get(i, j) - closed).norm());
            }
        }
    }
    Ok(EquivalenceReport {
        trials,
        seed,
        max_block_deviation: max_block,
        max_explicit_deviation: max_explicit,
    })
}

/// Classical evaluation of the cylinder expectation for per-step diagonal
/// observables (alpha on the hidden labels, beta on the outputs), using real
/// arithmetic only.
pub fn classical_forward(
    hmm: &ClassicalHMM,
    observables: &[(DiagonalObservable, DiagonalObservable)],
) -> Result<f64> {
    let n = hmm.hidden_count();
    let m = hmm.output_count();
    if observables.len() > hmm.step_count() {
        return Err(Error::LengthMismatch {
            context: "classical_forward",
            expected: hmm.step_count(),
            actual: observables.len(),
        });
    }
    for (alpha, beta) in observables {
        if alpha.len() != n || beta.len() != m {
            return Err(Error::DimensionMismatch {
                context: "classical_forward",
                expected: format!("weights of lengths {n} and {m}"),
                actual: format!("{} and {}", alpha.len(), beta.len()),
            });
        }
    }
    // Backward accumulation of the per-step diagonal block values.
    let mut value = vec![1.0f64; n];
    for (step_idx, (alpha, beta)) in observables.iter().enumerate().rev() {
        let pi = hmm.transition(step_idx)?;
        let q = hmm.emission(step_idx)?;
        let mut next = vec![0.0f64; n];
        for i in 0..n {
            let emit: f64 = (0..m).map(|k| q[i][k] * beta.weights()[k]).sum();
            let advance: f64 = (0..n).map(|j| pi[i][j] * value[j]).sum();
            next[i] = alpha.weights()[i] * emit * advance;
        }
        value = next;
    }
    Ok(hmm
        .initial()
        .iter()
        .zip(&value)
        .map(|(p, v)| p * v)
        .sum())
}

/// True iff the lifted quantum evaluation reproduces the classical forward
/// value within `tol` under both wirings.
pub fn corollary_check(
    hmm: &ClassicalHMM,
    observables: &[(DiagonalObservable, DiagonalObservable)],
    tol: f64,
) -> Result<bool> {
    let classical = classical_forward(hmm, observables)?;
    let pairs: Vec<(Effect, Effect)> = observables
        .iter()
        .map(|(alpha, beta)| Ok((alpha.to_effect(tol)?, beta.to_effect(tol)?)))
        .collect::<Result<_>>()?;
    let effects = EffectSequence::new(pairs);
    let model = hmm.lifted_model(Architecture::Conventional)?;
    let (conv, caus, _) =
        compare_architectures(model.initial_state(), model.steps(), &effects)?;
    Ok((conv - classical).abs() < tol && (caus - classical).abs() < tol)
}
