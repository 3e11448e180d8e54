//! Seeded random states, Hamiltonians, bipartite states, and channels.
//!
//! Every sampler takes an explicit seed (ChaCha8 stream) so sweeps and
//! verification suites replay bit-identically; fan-out code derives
//! per-sample seeds as `seed + index`.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hermitian::{complex_ginibre, sample_haar_unitary_with, CMatrix, HermitianMatrix};
use crate::majorisation::{apply_t_transforms, TTransform};
use crate::states::{DensityMatrix, Hamiltonian, PureBipartiteState};

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Hilbert–Schmidt random state `G G† / tr(G G†)` for complex Ginibre G.
pub fn sample_hs_state(dim: usize, seed: u64) -> DensityMatrix {
    let mut rng = rng_for(seed);
    sample_hs_state_with(dim, &mut rng)
}

pub fn sample_hs_state_with(dim: usize, rng: &mut impl Rng) -> DensityMatrix {
    let g = complex_ginibre(dim, rng);
    let w = &g * g.adjoint();
    let trace: f64 = (0..dim).map(|i| w[(i, i)].re).sum();
    let normalized = w / Complex64::new(trace, 0.0);
    DensityMatrix::new(HermitianMatrix::new(normalized).expect("GG† is Hermitian"))
        .expect("normalized Wishart matrix is a state")
}

/// Random Hamiltonian with spectrum i.i.d. uniform in `[lo, hi]` and a Haar
/// random eigenbasis.
pub fn sample_bounded_hamiltonian(
    dim: usize,
    lo: f64,
    hi: f64,
    kbt: f64,
    seed: u64,
) -> Result<Hamiltonian> {
    let mut rng = rng_for(seed);
    sample_bounded_hamiltonian_with(dim, lo, hi, kbt, &mut rng)
}

pub fn sample_bounded_hamiltonian_with(
    dim: usize,
    lo: f64,
    hi: f64,
    kbt: f64,
    rng: &mut impl Rng,
) -> Result<Hamiltonian> {
    let spectrum: Vec<f64> = (0..dim).map(|_| rng.random_range(lo..=hi)).collect();
    let u = sample_haar_unitary_with(dim, rng);
    let mut scaled = u.clone();
    for (j, &e) in spectrum.iter().enumerate() {
        let mut col = scaled.column_mut(j);
        col *= Complex64::new(e, 0.0);
    }
    let m = scaled * u.adjoint();
    Hamiltonian::with_bounds(HermitianMatrix::new(m)?, kbt, Some((lo.min(hi), hi.max(lo))))
}

/// Haar-distributed bipartite pure state (Ginibre amplitudes, normalized).
pub fn sample_pure_bipartite(local_dim: usize, seed: u64) -> PureBipartiteState {
    let mut rng = rng_for(seed);
    sample_pure_bipartite_with(local_dim, &mut rng)
}

pub fn sample_pure_bipartite_with(local_dim: usize, rng: &mut impl Rng) -> PureBipartiteState {
    let g = complex_ginibre(local_dim, rng);
    let norm = g.norm();
    PureBipartiteState::new(g / Complex64::new(norm, 0.0))
        .expect("normalized amplitudes form a state")
}

/// Random probability vector (uniform on the simplex via exponentials).
pub fn sample_probability_vector(dim: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut v: Vec<f64> = (0..dim)
        .map(|_| -f64::ln(1.0 - rng.random::<f64>()))
        .collect();
    let sum: f64 = v.iter().sum();
    for x in v.iter_mut() {
        *x /= sum;
    }
    v
}

/// A pair (ρ, σ) with ρ ≻ σ: σ's spectrum is ρ's pushed through a few random
/// T-transforms; both states get independent Haar eigenbases.
pub fn sample_majorising_pair(dim: usize, seed: u64) -> (DensityMatrix, DensityMatrix) {
    let mut rng = rng_for(seed);
    let spectrum = sample_probability_vector(dim, &mut rng);
    let mut sorted = spectrum.clone();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let n_mixes = rng.random_range(1..=2 * dim);
    let mut chain = Vec::with_capacity(n_mixes);
    for _ in 0..n_mixes {
        let i = rng.random_range(0..dim);
        let mut j = rng.random_range(0..dim);
        if j == i {
            j = (j + 1) % dim;
        }
        chain.push(TTransform {
            t: rng.random_range(0.5..=1.0),
            i,
            j,
        });
    }
    let pushed = apply_t_transforms(&sorted, &chain);

    let rho = rotate_into_random_basis(&sorted, &mut rng);
    let sigma = rotate_into_random_basis(&pushed, &mut rng);
    (rho, sigma)
}

/// A pair (ρ, σ) with exactly tied leading partial sums: σ averages adjacent
/// blocks of ρ's sorted spectrum, so the prefix sums outside block interiors
/// match bit-for-bit.
pub fn sample_boundary_tied_pair(dim: usize, seed: u64) -> (DensityMatrix, DensityMatrix) {
    let mut rng = rng_for(seed);
    let mut sorted = sample_probability_vector(dim, &mut rng);
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());

    if dim < 3 {
        // Only the excluded full sum can tie after averaging; use an
        // identical spectrum instead so every gap ties.
        let rho = rotate_into_random_basis(&sorted, &mut rng);
        let sigma = rotate_into_random_basis(&sorted, &mut rng);
        return (rho, sigma);
    }

    let mut averaged = sorted.clone();
    let mut i = 0;
    let mut any = false;
    while i + 1 < dim {
        if rng.random::<f64>() < 0.6 {
            let mean = 0.5 * (averaged[i] + averaged[i + 1]);
            averaged[i] = mean;
            averaged[i + 1] = mean;
            any = true;
            i += 2;
        } else {
            i += 1;
        }
    }
    if !any && dim >= 2 {
        let mean = 0.5 * (averaged[0] + averaged[1]);
        averaged[0] = mean;
        averaged[1] = mean;
    }

    let rho = rotate_into_random_basis(&sorted, &mut rng);
    let sigma = rotate_into_random_basis(&averaged, &mut rng);
    (rho, sigma)
}

fn rotate_into_random_basis(probs: &[f64], rng: &mut impl Rng) -> DensityMatrix {
    let d = probs.len();
    let u = sample_haar_unitary_with(d, rng);
    let mut scaled = u.clone();
    for (j, &p) in probs.iter().enumerate() {
        let mut col = scaled.column_mut(j);
        col *= Complex64::new(p, 0.0);
    }
    let m = scaled * u.adjoint();
    DensityMatrix::new(HermitianMatrix::new(m).expect("rotation preserves Hermiticity"))
        .expect("rotation preserves spectrum")
}

/// Convex mixture of Haar-random unitary conjugations.
#[derive(Debug, Clone)]
pub struct MixedUnitaryChannel {
    pub terms: Vec<(f64, CMatrix)>,
}

impl MixedUnitaryChannel {
    pub fn apply(&self, state: &DensityMatrix) -> Result<DensityMatrix> {
        let d = state.dim();
        let mut out = CMatrix::zeros(d, d);
        for (w, u) in &self.terms {
            out += (u * state.matrix().data() * u.adjoint()) * Complex64::new(*w, 0.0);
        }
        DensityMatrix::new(HermitianMatrix::new(out)?)
    }
}

/// Samples a mixed-unitary channel with 2..=4 Haar terms and simplex-uniform
/// weights.
pub fn sample_mixed_unitary_channel(dim: usize, seed: u64) -> MixedUnitaryChannel {
    let mut rng = rng_for(seed);
    let n_terms = rng.random_range(2..=4);
    let weights = sample_probability_vector(n_terms, &mut rng);
    let terms = weights
        .into_iter()
        .map(|w| (w, sample_haar_unitary_with(dim, &mut rng)))
        .collect();
    MixedUnitaryChannel { terms }
}
