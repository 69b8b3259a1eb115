//! Block-map invariants: telescoping, monotonicity in effects, adjoint
//! pairing, and agreement between the canonical duals and the displayed
//! dual-map formulas.

use hqmm_core::block::{
    block_superoperator, canonical_dual, causal_block, compare_architectures, conventional_block,
    cylinder_expectation, lemma_dual_causal, lemma_dual_conventional, Architecture,
    EffectSequence, HQMMModel, HQMMStep,
};
use hqmm_core::channel::{DensityOperator, Effect};
use hqmm_core::linalg::{c64, ComplexMatrix};
use hqmm_core::qubit::{build_model, QubitModelParams};
use hqmm_core::sampling::{
    random_density, random_distribution, random_effect, random_hermitian, random_stochastic,
    random_unital_expectation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_step(rng: &mut impl Rng, n: usize, m: usize, rank: usize) -> HQMMStep {
    let hidden = random_unital_expectation(rng, n, n, rank).unwrap();
    let emission = random_unital_expectation(rng, n, m, rank).unwrap();
    HQMMStep::new(hidden, emission).unwrap()
}

#[test]
fn identity_effects_telescope_to_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    for steps in 1..=6 {
        let n = rng.random_range(2..=3);
        let m = rng.random_range(2..=3);
        let step_list: Vec<HQMMStep> = (0..steps)
            .map(|_| random_step(&mut rng, n, m, 2))
            .collect();
        let initial = random_density(&mut rng, n);
        for arch in [Architecture::Conventional, Architecture::Causal] {
            let model = HQMMModel::new(initial.clone(), step_list.clone(), arch).unwrap();
            let effects = EffectSequence::identities(steps, n, m);
            let p = cylinder_expectation(&model, &effects).unwrap();
            assert!((p - 1.0).abs() < 1e-12, "{arch:?} with {steps} steps: {p}");
        }
    }
}

#[test]
fn cylinder_values_lie_in_unit_interval() {
    let mut rng = ChaCha8Rng::seed_from_u64(207);
    for _ in 0..30 {
        let n = 2;
        let m = 2;
        let steps: Vec<HQMMStep> = (0..3).map(|_| random_step(&mut rng, n, m, 2)).collect();
        let initial = random_density(&mut rng, n);
        let effects = EffectSequence::new(
            (0..3)
                .map(|_| (random_effect(&mut rng, n), random_effect(&mut rng, m)))
                .collect(),
        );
        for arch in [Architecture::Conventional, Architecture::Causal] {
            let model = HQMMModel::new(initial.clone(), steps.clone(), arch).unwrap();
            let p = cylinder_expectation(&model, &effects).unwrap();
            assert!(p >= -1e-10 && p <= 1.0 + 1e-10, "out of range: {p}");
        }
    }
}

#[test]
fn cylinder_is_monotone_in_effects() {
    let mut rng = ChaCha8Rng::seed_from_u64(211);
    for _ in 0..25 {
        let n = 2;
        let m = 2;
        let steps: Vec<HQMMStep> = (0..2).map(|_| random_step(&mut rng, n, m, 2)).collect();
        let initial = random_density(&mut rng, n);
        let base: Vec<(Effect, Effect)> = (0..2)
            .map(|_| (random_effect(&mut rng, n), random_effect(&mut rng, m)))
            .collect();

        // Enlarge one effect along e' = (1 - t) e + t I, which dominates e.
        let step_slot = rng.random_range(0..2);
        let hidden_side = rng.random_range(0..2) == 0;
        let t: f64 = rng.random_range(0.0..1.0);
        let mut enlarged = base.clone();
        let (old, side) = if hidden_side {
            (enlarged[step_slot].0.matrix().clone(), n)
        } else {
            (enlarged[step_slot].1.matrix().clone(), m)
        };
        let bigger = old
            .scale(c64(1.0 - t, 0.0))
            .add(&ComplexMatrix::identity(side).scale(c64(t, 0.0)));
        let bigger = Effect::new(bigger, 1e-9).unwrap();
        if hidden_side {
            enlarged[step_slot].0 = bigger;
        } else {
            enlarged[step_slot].1 = bigger;
        }

        for arch in [Architecture::Conventional, Architecture::Causal] {
            let model = HQMMModel::new(initial.clone(), steps.clone(), arch).unwrap();
            let small = cylinder_expectation(&model, &EffectSequence::new(base.clone())).unwrap();
            let large =
                cylinder_expectation(&model, &EffectSequence::new(enlarged.clone())).unwrap();
            assert!(large >= small - 1e-10, "{arch:?}: {large} < {small}");
        }
    }
}

#[test]
fn canonical_dual_satisfies_pairing_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(223);
    let step = random_step(&mut rng, 3, 2, 2);
    let a = random_hermitian(&mut rng, 3);
    let b = random_hermitian(&mut rng, 2);
    for arch in [Architecture::Conventional, Architecture::Causal] {
        let s = block_superoperator(&step, &a, &b, arch).unwrap();
        let dual = canonical_dual(&s);
        for _ in 0..500 {
            let rho = random_hermitian(&mut rng, 3);
            let x = random_hermitian(&mut rng, 3);
            let lhs = dual.apply(&rho).unwrap().matmul(&x).trace();
            let rhs = rho.matmul(&s.apply(&x).unwrap()).trace();
            assert!((lhs - rhs).norm() < 1e-10);
        }
    }
}

#[test]
fn lemma_dual_conventional_agrees_with_canonical_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(229);
    for rank in 1..=3 {
        for _ in 0..10 {
            let n = rng.random_range(2..=3);
            let m = rng.random_range(2..=3);
            let step = random_step(&mut rng, n, m, rank);
            let a = random_effect(&mut rng, n).matrix().clone();
            let b = random_effect(&mut rng, m).matrix().clone();
            let rho = random_density(&mut rng, n);
            let via_lemma = lemma_dual_conventional(&step, &a, &b, &rho).unwrap();
            let via_adjoint = canonical_dual(
                &block_superoperator(&step, &a, &b, Architecture::Conventional).unwrap(),
            )
            .apply(rho.matrix())
            .unwrap();
            assert!(via_lemma.max_abs_diff(&via_adjoint) < 1e-10);
        }
    }
}

#[test]
fn lemma_dual_causal_trace_matches_heisenberg_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(233);
    for _ in 0..25 {
        let n = rng.random_range(2..=3);
        let m = rng.random_range(2..=3);
        let step = random_step(&mut rng, n, m, 2);
        let a = random_effect(&mut rng, n).matrix().clone();
        let b = random_effect(&mut rng, m).matrix().clone();
        let rho = random_density(&mut rng, n);
        let dual_out = lemma_dual_causal(&step, &a, &b, &rho).unwrap();
        assert_eq!(dual_out.rows(), m);
        let g_of_id = causal_block(&step, &a, &b, &ComplexMatrix::identity(n)).unwrap();
        let scalar = rho.matrix().matmul(&g_of_id).trace();
        assert!((dual_out.trace() - scalar).norm() < 1e-10);
    }
}

#[test]
fn lemma_duals_collapse_under_identity_effects() {
    let mut rng = ChaCha8Rng::seed_from_u64(239);
    let step = random_step(&mut rng, 2, 3, 2);
    let rho = random_density(&mut rng, 2);
    let id_a = ComplexMatrix::identity(2);
    let id_b = ComplexMatrix::identity(3);
    let conv = lemma_dual_conventional(&step, &id_a, &id_b, &rho).unwrap();
    assert!((conv.trace().re - 1.0).abs() < 1e-10);
    let caus = lemma_dual_causal(&step, &id_a, &id_b, &rho).unwrap();
    assert!((caus.trace().re - 1.0).abs() < 1e-10);
}

#[test]
fn qubit_dual_marginals_at_fixed_effects() {
    let theta = 1.3f64;
    let step = build_model(QubitModelParams::new(theta));
    let rho = DensityOperator::basis_state(2, 0).unwrap();
    let id = ComplexMatrix::identity(2);
    let b = ComplexMatrix::basis_projector(2, 0).unwrap();

    // Conventional dual: subnormalised, trace cos^2(theta/2), supported on |0>.
    let conv = lemma_dual_conventional(&step, &id, &b, &rho).unwrap();
    let c2 = (theta / 2.0).cos().powi(2);
    assert!(conv.max_abs_diff(&b.scale(c64(c2, 0.0))) < 1e-12);

    // Causal dual via the adjoint: trace one, exactly |0><0|.
    let caus = canonical_dual(
        &block_superoperator(&step, &id, &b, Architecture::Causal).unwrap(),
    )
    .apply(rho.matrix())
    .unwrap();
    assert!(caus.max_abs_diff(&b) < 1e-12);
}

#[test]
fn qubit_conventional_superoperator_is_rank_one() {
    // At (a, b) = (I, |e0><e0|) the conventional block collapses to
    // X |-> <0|X|0> U*|0><0|U; probe the superoperator on matrix units.
    let theta = 0.8f64;
    let step = build_model(QubitModelParams::new(theta));
    let a = ComplexMatrix::identity(2);
    let b = ComplexMatrix::basis_projector(2, 0).unwrap();
    let s = block_superoperator(&step, &a, &b, Architecture::Conventional).unwrap();
    let u = hqmm_core::build_unitary(theta);
    let target = u
        .adjoint()
        .matmul(&ComplexMatrix::basis_projector(2, 0).unwrap())
        .matmul(&u);
    for i in 0..2 {
        for j in 0..2 {
            let unit = ComplexMatrix::matrix_unit(2, i, j);
            let image = s.apply(&unit).unwrap();
            let weight = unit.get(0, 0);
            assert!(image.max_abs_diff(&target.scale(weight)) < 1e-13);
        }
    }
}

#[test]
fn architectures_agree_on_lifted_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(241);
    for _ in 0..20 {
        let n = rng.random_range(2..=4);
        let m = rng.random_range(2..=4);
        let hmm = hqmm_core::ClassicalHMM::new(
            random_distribution(&mut rng, n),
            vec![random_stochastic(&mut rng, n, n)],
            vec![random_stochastic(&mut rng, n, m)],
            1e-9,
        )
        .unwrap();
        let step = hmm.lifted_step(0).unwrap();
        let a = random_hermitian(&mut rng, n);
        let b = random_hermitian(&mut rng, m);
        let x = random_hermitian(&mut rng, n);
        let f = conventional_block(&step, &a, &b, &x).unwrap();
        let g = causal_block(&step, &a, &b, &x).unwrap();
        assert!(f.max_abs_diff(&g) < 1e-12);
    }
}

#[test]
fn compare_architectures_reports_signed_views() {
    let step = build_model(QubitModelParams::new(std::f64::consts::FRAC_PI_2));
    let rho = DensityOperator::basis_state(2, 0).unwrap();
    let effects = EffectSequence::new(vec![(
        Effect::identity(2),
        Effect::basis_projector(2, 0).unwrap(),
    )]);
    let (conv, caus, diff) = compare_architectures(&rho, &[step], &effects).unwrap();
    assert!((conv - 0.5).abs() < 1e-12);
    assert!((caus - 1.0).abs() < 1e-12);
    assert!((diff - 0.5).abs() < 1e-12);
}
