//! Seeded random quantum objects.
//!
//! Observables are drawn with independent complex Gaussian entries and then
//! Hermitised as (X + X*)/2. Everything is driven by a ChaCha stream cipher
//! generator so reports are reproducible from a single 64-bit seed.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::channel::{DensityOperator, Effect, TransitionExpectation};
use crate::error::Result;
use crate::linalg::{c64, hermitian_eig, ComplexMatrix, DEFAULT_TOL};

/// Default seed used by reports when none is given.
pub const DEFAULT_SEED: u64 = 42;

/// Matrix with independent standard complex Gaussian entries.
pub fn complex_gaussian_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        c64(re, im)
    })
}

/// (G + G*)/2 for complex Gaussian G.
pub fn random_hermitian(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    complex_gaussian_matrix(rng, dim, dim).hermitian_part()
}

/// Normalised Wishart state G G* / Tr(G G*).
pub fn random_density(rng: &mut impl Rng, dim: usize) -> DensityOperator {
    let g = complex_gaussian_matrix(rng, dim, dim);
    let w = g.matmul(&g.adjoint());
    let trace = w.trace().re;
    DensityOperator::new(w.scale(c64(1.0 / trace, 0.0)), 1e-8).expect("wishart state")
}

/// Random effect: a Gaussian Hermitian matrix affinely rescaled so its
/// spectrum spans [0, 1].
pub fn random_effect(rng: &mut impl Rng, dim: usize) -> Effect {
    let h = random_hermitian(rng, dim);
    let eig = hermitian_eig(&h, DEFAULT_TOL).expect("hermitian by construction");
    let lo = eig.eigenvalues[0];
    let hi = eig.eigenvalues[dim - 1];
    let matrix = if hi - lo < 1e-9 {
        ComplexMatrix::identity(dim).scale(c64(0.5, 0.0))
    } else {
        let shifted = h.sub(&ComplexMatrix::identity(dim).scale(c64(lo, 0.0)));
        shifted.scale(c64(1.0 / (hi - lo), 0.0))
    };
    Effect::new(matrix, 1e-8).expect("spectrum rescaled into [0, 1]")
}

/// Random unital CP map with the requested Kraus rank: Gaussian operators
/// G_i are whitened by S^{-1/2} with S = sum_i G_i* G_i, so that the Kraus
/// family satisfies the completeness relation exactly.
pub fn random_unital_expectation(
    rng: &mut impl Rng,
    dim_a: usize,
    dim_b: usize,
    rank: usize,
) -> Result<TransitionExpectation> {
    let dout = dim_a * dim_b;
    let raw: Vec<ComplexMatrix> = (0..rank.max(1))
        .map(|_| complex_gaussian_matrix(rng, dout, dim_a))
        .collect();
    let mut gram = ComplexMatrix::zeros(dim_a, dim_a);
    for g in &raw {
        gram = gram.add(&g.adjoint().matmul(g));
    }
    // Tight whitening so multi-step compositions stay unital to ~1e-13.
    let eig = hermitian_eig(&gram, 1e-13)?;
    let v = &eig.eigenvectors;
    let inv_sqrt = ComplexMatrix::from_fn(dim_a, dim_a, |i, j| {
        (0..dim_a)
            .map(|k| {
                let lambda = eig.eigenvalues[k].max(1e-12);
                v.get(i, k) * (1.0 / lambda.sqrt()) * v.get(j, k).conj()
            })
            .sum()
    });
    let ops: Vec<ComplexMatrix> = raw.iter().map(|g| g.matmul(&inv_sqrt)).collect();
    TransitionExpectation::new(dim_a, dim_b, ops, 1e-8)
}

/// Row-stochastic matrix with Dirichlet-like rows from squared Gaussians.
pub fn random_stochastic(rng: &mut impl Rng, rows: usize, cols: usize) -> Vec<Vec<f64>> {
    (0..rows)
        .map(|_| {
            let mut row: Vec<f64> = (0..cols)
                .map(|_| {
                    let x: f64 = StandardNormal.sample(rng);
                    x * x + 1e-3
                })
                .collect();
            let sum: f64 = row.iter().sum();
            for p in &mut row {
                *p /= sum;
            }
            row
        })
        .collect()
}

/// Probability vector sampled the same way as stochastic rows.
pub fn random_distribution(rng: &mut impl Rng, len: usize) -> Vec<f64> {
    random_stochastic(rng, 1, len).remove(0)
}
