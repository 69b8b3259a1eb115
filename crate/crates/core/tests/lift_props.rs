//! Lifted classical chains: isometry of the lift, agreement of the two
//! wirings, the closed-form matrix elements, and the classical reduction on
//! diagonal observables.

use hqmm_core::block::conventional_block;
use hqmm_core::lift::{
    check_equivalence, classical_forward, corollary_check, explicit_block_element,
    lift_emission, lift_transition, ClassicalHMM, DiagonalObservable,
};
use hqmm_core::linalg::ComplexMatrix;
use hqmm_core::sampling::{random_distribution, random_hermitian, random_stochastic};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_hmm(rng: &mut impl Rng, n: usize, m: usize, steps: usize) -> ClassicalHMM {
    ClassicalHMM::new(
        random_distribution(rng, n),
        (0..steps).map(|_| random_stochastic(rng, n, n)).collect(),
        (0..steps).map(|_| random_stochastic(rng, n, m)).collect(),
        1e-9,
    )
    .unwrap()
}

#[test]
fn lifted_isometries_are_exact_for_500_random_kernels() {
    let mut rng = ChaCha8Rng::seed_from_u64(301);
    for _ in 0..500 {
        let n = rng.random_range(1..=5);
        let m = rng.random_range(1..=5);
        let hidden = lift_transition(&random_stochastic(&mut rng, n, n)).unwrap();
        let emission = lift_emission(&random_stochastic(&mut rng, n, m)).unwrap();
        for e in [&hidden, &emission] {
            let v = &e.kraus().operators()[0];
            let gram = v.adjoint().matmul(v);
            assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
        }
    }
}

#[test]
fn architectures_agree_for_500_random_hmms() {
    let mut rng = ChaCha8Rng::seed_from_u64(307);
    let mut worst_block = 0.0f64;
    let mut worst_explicit = 0.0f64;
    for i in 0..500 {
        let n = rng.random_range(1..=4);
        let m = rng.random_range(1..=4);
        let hmm = random_hmm(&mut rng, n, m, 1);
        let seed = 1000 + i as u64;
        let report = check_equivalence(&hmm, 0, 2, seed).unwrap();
        worst_block = worst_block.max(report.max_block_deviation);
        worst_explicit = worst_explicit.max(report.max_explicit_deviation);
    }
    assert!(worst_block < 1e-12, "max block deviation {worst_block:.3e}");
    assert!(
        worst_explicit < 1e-12,
        "max closed-form deviation {worst_explicit:.3e}"
    );
}

#[test]
fn explicit_elements_match_dense_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(311);
    for _ in 0..50 {
        let n = rng.random_range(2..=4);
        let m = rng.random_range(2..=4);
        let hmm = random_hmm(&mut rng, n, m, 1);
        let step = hmm.lifted_step(0).unwrap();
        let a = random_hermitian(&mut rng, n);
        let b = random_hermitian(&mut rng, m);
        let x = random_hermitian(&mut rng, n);
        let dense = conventional_block(&step, &a, &b, &x).unwrap();
        for i in 0..n {
            for j in 0..n {
                let closed = explicit_block_element(&hmm, 0, i, j, &a, &b, &x).unwrap();
                assert!((dense.get(i, j) - closed).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn scalar_chain_is_degenerate_to_rounding() {
    // With one hidden state both wirings reduce to the same scalar product,
    // differing only in floating-point association order.
    let hmm = ClassicalHMM::new(
        vec![1.0],
        vec![vec![vec![1.0]]],
        vec![vec![vec![0.3, 0.7]]],
        1e-12,
    )
    .unwrap();
    let report = check_equivalence(&hmm, 0, 25, 13).unwrap();
    assert!(report.max_block_deviation < 1e-15);
    assert!(report.max_explicit_deviation < 1e-14);
}

#[test]
fn diagonal_observables_reduce_to_forward_oracle_on_100_hmms() {
    let mut rng = ChaCha8Rng::seed_from_u64(313);
    for _ in 0..100 {
        let n = rng.random_range(2..=4);
        let m = rng.random_range(2..=4);
        let steps = rng.random_range(1..=4);
        let hmm = random_hmm(&mut rng, n, m, steps);
        let observables: Vec<(DiagonalObservable, DiagonalObservable)> = (0..steps)
            .map(|_| {
                let alpha: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
                let beta: Vec<f64> = (0..m).map(|_| rng.random_range(0.0..1.0)).collect();
                (
                    DiagonalObservable::new(alpha).unwrap(),
                    DiagonalObservable::new(beta).unwrap(),
                )
            })
            .collect();
        assert!(corollary_check(&hmm, &observables, 1e-12).unwrap());
    }
}

#[test]
fn forward_oracle_composes_independent_of_quantum_path() {
    // Three steps evaluated by hand against the backward recursion.
    let hmm = ClassicalHMM::homogeneous(
        vec![0.5, 0.5],
        vec![vec![0.9, 0.1], vec![0.3, 0.7]],
        vec![vec![0.6, 0.4], vec![0.1, 0.9]],
        2,
        1e-12,
    )
    .unwrap();
    let alpha = DiagonalObservable::new(vec![1.0, 0.5]).unwrap();
    let beta = DiagonalObservable::new(vec![0.2, 1.0]).unwrap();
    let obs = vec![(alpha.clone(), beta.clone()), (alpha.clone(), beta.clone())];

    // Hand recursion.
    let emit = |i: usize| -> f64 {
        let q = [[0.6, 0.4], [0.1, 0.9]];
        q[i][0] * 0.2 + q[i][1] * 1.0
    };
    let pi = [[0.9, 0.1], [0.3, 0.7]];
    let alpha_w = [1.0, 0.5];
    let mut value = [1.0, 1.0];
    for _ in 0..2 {
        let mut next = [0.0, 0.0];
        for i in 0..2 {
            let advance: f64 = (0..2).map(|j| pi[i][j] * value[j]).sum();
            next[i] = alpha_w[i] * emit(i) * advance;
        }
        value = next;
    }
    let expected = 0.5 * value[0] + 0.5 * value[1];

    let computed = classical_forward(&hmm, &obs).unwrap();
    assert!((computed - expected).abs() < 1e-14);
    assert!(corollary_check(&hmm, &obs, 1e-12).unwrap());
}

#[test]
fn lifted_blocks_preserve_diagonality() {
    let mut rng = ChaCha8Rng::seed_from_u64(317);
    for _ in 0..25 {
        let n = rng.random_range(2..=4);
        let m = rng.random_range(2..=4);
        let hmm = random_hmm(&mut rng, n, m, 1);
        let step = hmm.lifted_step(0).unwrap();
        let diag = |rng: &mut ChaCha8Rng, d: usize| {
            ComplexMatrix::diag(&(0..d).map(|_| rng.random_range(-1.0..1.0)).collect::<Vec<_>>())
        };
        let a = diag(&mut rng, n);
        let b = diag(&mut rng, m);
        let x = diag(&mut rng, n);
        let out = conventional_block(&step, &a, &b, &x).unwrap();
        let mut off_mass = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off_mass = off_mass.max(out.get(i, j).norm());
                }
            }
        }
        assert!(off_mass < 1e-12);
    }
}

#[test]
fn equivalence_check_embeds_seed_and_trials() {
    let mut rng = ChaCha8Rng::seed_from_u64(331);
    let hmm = random_hmm(&mut rng, 3, 2, 1);
    let report = check_equivalence(&hmm, 0, 17, 12345).unwrap();
    assert_eq!(report.trials, 17);
    assert_eq!(report.seed, 12345);
    let replay = check_equivalence(&hmm, 0, 17, 12345).unwrap();
    assert_eq!(report.max_block_deviation, replay.max_block_deviation);
    assert_eq!(report.max_explicit_deviation, replay.max_explicit_deviation);
}
