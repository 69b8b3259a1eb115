//! Hidden quantum Markov models under two causal wirings of the same local
//! maps: emission-then-transition and transition-then-emission.
//!
//! The crate provides
//!
//! - a dense complex kernel ([`linalg`]): Kronecker products, partial traces,
//!   a cyclic Jacobi Hermitian eigensolver, trace norms and von Neumann
//!   entropy;
//! - states, effects and unital CP maps in Kraus form, Choi operators, and
//!   Heisenberg/Schroedinger duality checks ([`channel`]);
//! - the one-step block maps of the two architectures, their
//!   Hilbert-Schmidt duals, and cylinder expectations ([`block`]);
//! - the explicit qubit model with a claim-by-claim numeric report
//!   ([`qubit`]);
//! - isometric liftings of classical HMMs, where the two architectures
//!   provably coincide, with a real-arithmetic forward oracle ([`lift`]);
//! - Choi-difference trace norms and diamond-distance brackets
//!   ([`discrimination`]).
//!
//! Entropies are in nats. All probability evaluations go through the
//! Heisenberg-picture composition; dual-map formulas exist as cross-checks.

pub mod block;
pub mod channel;
pub mod discrimination;
pub mod error;
pub mod lift;
pub mod linalg;
pub mod qubit;
pub mod sampling;

pub use block::{
    block_apply, block_superoperator, canonical_dual, causal_block, compare_architectures,
    conventional_block, cylinder_expectation, lemma_dual_causal, lemma_dual_conventional,
    Architecture, EffectSequence, HQMMModel, HQMMStep, Superoperator,
};
pub use channel::{
    check_unital, choi, duality_residual, isometry_expectation, validate_effect, DensityOperator,
    Effect, KrausMap, TransitionExpectation,
};
pub use discrimination::{
    choi_difference_trace_norm, diamond_bounds, success_probability_bracket, ChannelPair,
    DiamondBracket, SuccessBracket,
};
pub use error::{Error, Result};
pub use lift::{
    check_equivalence, classical_forward, corollary_check, explicit_block_element,
    lift_emission, lift_transition, validate_hmm, ClassicalHMM, DiagonalObservable,
    EquivalenceReport,
};
pub use linalg::{
    c64, hermitian_eig, trace_norm_hermitian, von_neumann_entropy, ComplexMatrix, HermitianEigen,
    TensorFactor, DEFAULT_TOL,
};
pub use qubit::{
    build_model, build_model_with, build_unitary, choi_entanglement_analysis, choi_vectors,
    default_theta_grid, paper_entropy_formula, paper_kraus_pair, verify_paper_claims, ClaimRecord,
    ClaimReport, ClaimStatus, EntanglementAnalysis, QubitModelParams, SlotConvention,
    CLAIM_REGISTRY,
};
pub use sampling::DEFAULT_SEED;
