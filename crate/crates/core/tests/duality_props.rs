//! Heisenberg/Schroedinger duality, complete positivity via Choi operators,
//! and unitality/trace-preservation across random CP maps.

use hqmm_core::channel::{check_unital, choi, duality_residual};
use hqmm_core::linalg::{hermitian_eig, ComplexMatrix, TensorFactor};
use hqmm_core::qubit::{build_model, QubitModelParams};
use hqmm_core::sampling::{
    complex_gaussian_matrix, random_density, random_hermitian, random_unital_expectation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn duality_residual_over_1000_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst = 0.0f64;
    for trial in 0..1000 {
        let dim_a = rng.random_range(1..=4);
        let dim_b = rng.random_range(1..=4);
        let rank = rng.random_range(1..=3);
        let e = random_unital_expectation(&mut rng, dim_a, dim_b, rank).unwrap();
        let rho = random_density(&mut rng, dim_a);
        let x = random_hermitian(&mut rng, dim_a * dim_b);
        let r = duality_residual(&e, &rho, &x).unwrap();
        worst = worst.max(r);
        assert!(r < 1e-10, "trial {trial}: residual {r:.3e}");
    }
    assert!(worst < 1e-10);
}

#[test]
fn duality_residual_identity_observable_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let e = random_unital_expectation(&mut rng, 3, 2, 2).unwrap();
        let rho = random_density(&mut rng, 3);
        let r = duality_residual(&e, &rho, &ComplexMatrix::identity(6)).unwrap();
        assert!(r < 1e-12);
    }
}

#[test]
fn qubit_duality_example_equals_projection_probability() {
    let theta = 1.1f64;
    let step = build_model(QubitModelParams::new(theta));
    let rho = hqmm_core::DensityOperator::basis_state(2, 0).unwrap();
    let x = ComplexMatrix::identity(2).kron(&ComplexMatrix::basis_projector(2, 0).unwrap());
    let r = duality_residual(step.emission(), &rho, &x).unwrap();
    assert!(r < 1e-12);
    // Both sides equal the sharp-emission probability of reading e0 from |0>.
    let heis = step.emission().apply_heisenberg(&x).unwrap();
    let value = rho.matrix().matmul(&heis).trace().re;
    assert!((value - 1.0).abs() < 1e-12);
    // Through the hidden rotation first, the probability picks up cos^2.
    let rotated = step
        .hidden()
        .apply_schrodinger_raw(rho.matrix())
        .unwrap()
        .partial_trace(2, 2, TensorFactor::Second)
        .unwrap();
    let p = rotated.matmul(&heis).trace().re;
    assert!((p - (theta / 2.0).cos().powi(2)).abs() < 1e-12);
}

#[test]
fn choi_operators_of_cp_maps_are_psd() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..60 {
        let dim_in = rng.random_range(1..=3);
        let dim_out = rng.random_range(1..=3);
        let rank = rng.random_range(1..=3);
        let ops: Vec<ComplexMatrix> = (0..rank)
            .map(|_| complex_gaussian_matrix(&mut rng, dim_out, dim_in))
            .collect();
        let map = hqmm_core::KrausMap::new(dim_in, dim_out, ops).unwrap();
        let j = choi(&map);
        let eig = hermitian_eig(&j, 1e-8).unwrap();
        assert!(eig.eigenvalues[0] >= -1e-10, "Choi not PSD: {}", eig.eigenvalues[0]);
    }
}

#[test]
fn unitality_implies_trace_preservation() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..40 {
        let e = random_unital_expectation(&mut rng, 2, 3, 2).unwrap();
        assert!(check_unital(e.kraus(), 1e-9));
        let rho = random_density(&mut rng, 2);
        let out = e.apply_schrodinger_raw(rho.matrix()).unwrap();
        assert!((out.trace().re - 1.0).abs() < 1e-10);
        assert!(out.trace().im.abs() < 1e-12);
    }
}

#[test]
fn heisenberg_action_preserves_positivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(93);
    for _ in 0..40 {
        let e = random_unital_expectation(&mut rng, 3, 2, 2).unwrap();
        let g = complex_gaussian_matrix(&mut rng, 6, 6);
        let psd = g.matmul(&g.adjoint());
        let out = e.apply_heisenberg(&psd).unwrap();
        let eig = hermitian_eig(&out, 1e-8).unwrap();
        assert!(eig.eigenvalues[0] >= -1e-10);
    }
}

#[test]
fn heisenberg_action_preserves_hermiticity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let e = random_unital_expectation(&mut rng, 2, 2, 3).unwrap();
        let x = random_hermitian(&mut rng, 4);
        let out = e.apply_heisenberg(&x).unwrap();
        assert!(out.asymmetry_norm() < 1e-12);
    }
}

#[test]
fn choi_marginal_identifies_trace_preserving_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..20 {
        let e = random_unital_expectation(&mut rng, 2, 2, 2).unwrap();
        let j = choi(e.kraus());
        let marginal = j.partial_trace(2, 4, TensorFactor::Second).unwrap();
        assert!(marginal.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-9);
    }
}
