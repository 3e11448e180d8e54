//! Majorisation tests and constructive conversion certificates.
//!
//! `majorises` reports the partial-sum gaps Σ_{i≤k}(ρ_i↓ − σ_i↓) for
//! k = 0..d−2 (the k = d−1 sum is identically zero for unit traces and is
//! excluded). When ρ majorises σ, a doubly stochastic matrix carrying the
//! sorted spectrum of ρ onto that of σ is built as a product of at most d−1
//! T-transforms, split into permutations with a greedy Birkhoff
//! decomposition, and assembled into an explicit mixed-unitary channel.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermitian::{CMatrix, HermitianMatrix, Spectrum};
use crate::states::DensityMatrix;
use crate::tol;

/// Outcome of a majorisation test.
#[derive(Debug, Clone, Serialize)]
pub struct MajorisationReport {
    /// True iff every partial-sum gap is ≥ −1e-10.
    pub holds: bool,
    /// Σ_{i≤k}(ρ_i↓ − σ_i↓) for k = 0..d−2.
    pub partial_sum_gaps: Vec<f64>,
    /// Index of the minimal gap; `None` for one-dimensional systems.
    pub worst_k: Option<usize>,
    /// True when some gap sits within ±1e-10 of zero (tied partial sums);
    /// such borderline cases are reported rather than silently resolved.
    pub boundary: bool,
}

/// One T-transform: mixes coordinates `i` and `j` with weight `t ∈ [1/2, 1]`,
/// `x_i' = t·x_i + (1−t)·x_j`, `x_j' = (1−t)·x_i + t·x_j`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TTransform {
    pub t: f64,
    pub i: usize,
    pub j: usize,
}

/// One term of a Birkhoff decomposition: `weight · P_perm` where
/// `P_perm` maps basis vector `j` to basis vector `perm[j]`.
#[derive(Debug, Clone, Serialize)]
pub struct BirkhoffTerm {
    pub weight: f64,
    pub permutation: Vec<usize>,
}

/// Certificate realizing ρ → σ as an explicit mixed-unitary channel
/// `𝓝(X) = Σ_m w_m (V P_m U†) X (V P_m U†)†` with U, V the eigenbases of
/// ρ and σ and P_m permutation unitaries.
#[derive(Debug, Clone)]
pub struct ConversionCertificate {
    /// Product of the T-transform factors; carries ρ↓ onto σ↓.
    pub doubly_stochastic: DMatrix<f64>,
    pub birkhoff_terms: Vec<BirkhoffTerm>,
    /// Eigenbasis of ρ (columns aligned with ρ↓).
    pub basis_in: CMatrix,
    /// Eigenbasis of σ (columns aligned with σ↓).
    pub basis_out: CMatrix,
}

impl ConversionCertificate {
    /// Applies the certified channel to an arbitrary state.
    pub fn apply(&self, state: &DensityMatrix) -> Result<DensityMatrix> {
        let d = self.basis_in.nrows();
        if state.dim() != d {
            return Err(Error::DimensionMismatch {
                left: state.dim(),
                right: d,
            });
        }
        let u_dag = self.basis_in.adjoint();
        let mut out = CMatrix::zeros(d, d);
        for term in &self.birkhoff_terms {
            let mut kraus = CMatrix::zeros(d, d);
            // V P_m U†: row perm[j] of P_m U† is row j of U†.
            for j in 0..d {
                let target = term.permutation[j];
                for c in 0..d {
                    kraus[(target, c)] = u_dag[(j, c)];
                }
            }
            let kraus = &self.basis_out * kraus;
            out += (&kraus * state.matrix().data() * kraus.adjoint())
                * Complex64::new(term.weight, 0.0);
        }
        DensityMatrix::new(HermitianMatrix::new(out)?)
    }

    fn wire(&self) -> CertificateWire {
        let d = self.doubly_stochastic.nrows();
        CertificateWire {
            doubly_stochastic: (0..d)
                .map(|i| (0..d).map(|j| self.doubly_stochastic[(i, j)]).collect())
                .collect(),
            birkhoff_terms: self.birkhoff_terms.clone(),
            basis_in: crate::hermitian::matrix_to_rows(&self.basis_in),
            basis_out: crate::hermitian::matrix_to_rows(&self.basis_out),
        }
    }

    /// Max deviation of row and column sums of `doubly_stochastic` from 1.
    pub fn stochasticity_defect(&self) -> f64 {
        let d = self.doubly_stochastic.nrows();
        let mut worst = 0.0f64;
        for i in 0..d {
            let row: f64 = (0..d).map(|j| self.doubly_stochastic[(i, j)]).sum();
            let col: f64 = (0..d).map(|j| self.doubly_stochastic[(j, i)]).sum();
            worst = worst.max((row - 1.0).abs()).max((col - 1.0).abs());
        }
        worst
    }
}

#[derive(Serialize)]
struct CertificateWire {
    doubly_stochastic: Vec<Vec<f64>>,
    birkhoff_terms: Vec<BirkhoffTerm>,
    basis_in: Vec<Vec<[f64; 2]>>,
    basis_out: Vec<Vec<[f64; 2]>>,
}

impl Serialize for ConversionCertificate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.wire().serialize(serializer)
    }
}

/// Partial-sum majorisation test on the sorted spectra of two states.
pub fn majorises(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<MajorisationReport> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    Ok(majorises_spectra(rho.spectrum(), sigma.spectrum()))
}

/// Spectrum-level majorisation test; inputs must be non-increasing.
pub fn majorises_spectra(x: &Spectrum, y: &Spectrum) -> MajorisationReport {
    let d = x.len();
    let mut gaps = Vec::with_capacity(d.saturating_sub(1));
    let mut acc = 0.0;
    for k in 0..d.saturating_sub(1) {
        acc += x.values()[k] - y.values()[k];
        gaps.push(acc);
    }
    let holds = gaps.iter().all(|&g| g >= -tol::MAJORISATION_SLACK);
    let boundary = gaps.iter().any(|&g| g.abs() <= tol::MAJORISATION_BOUNDARY);
    let worst_k = gaps
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).expect("non-finite gap"))
        .map(|(k, _)| k);
    MajorisationReport {
        holds,
        partial_sum_gaps: gaps,
        worst_k,
        boundary,
    }
}

/// Hardy–Littlewood–Pólya chain: a sequence of at most d−1 T-transforms
/// carrying `x` onto `y` when `x` majorises `y` (both summing to the same
/// total). Each step pairs the largest coordinate of x still exceeding y
/// with the first later coordinate falling short, which keeps the working
/// vector sorted and fixes at least one coordinate per step.
pub fn t_transform_chain(x: &Spectrum, y: &Spectrum) -> Result<Vec<TTransform>> {
    let d = x.len();
    if y.len() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: y.len(),
        });
    }
    let report = majorises_spectra(x, y);
    if !report.holds {
        let k = report.worst_k.unwrap_or(0);
        return Err(Error::NotMajorising {
            k,
            shortfall: -report.partial_sum_gaps[k],
        });
    }

    let mut work = x.values().to_vec();
    let target = y.values();
    let mut chain = Vec::new();
    // Coordinates closer than this are treated as already matched.
    let eps = 1e-14;

    for _ in 0..d {
        // a: largest index with work[a] > target[a];
        // b: smallest index > a with work[b] < target[b].
        let a = match (0..d).rev().find(|&i| work[i] - target[i] > eps) {
            Some(a) => a,
            None => break,
        };
        let b = match (a + 1..d).find(|&i| target[i] - work[i] > eps) {
            Some(b) => b,
            None => break,
        };
        let c = (work[a] - target[a]).min(target[b] - work[b]);
        let spread = work[a] - work[b];
        debug_assert!(spread > 0.0);
        let t = 1.0 - c / spread;
        let (na, nb) = (
            t * work[a] + (1.0 - t) * work[b],
            (1.0 - t) * work[a] + t * work[b],
        );
        work[a] = na;
        work[b] = nb;
        chain.push(TTransform { t, i: a, j: b });
        if chain.len() > d {
            break;
        }
    }
    debug_assert!(chain.len() <= d.saturating_sub(1).max(0) + 1);
    Ok(chain)
}

/// Applies a T-transform chain to a vector (for replay checks).
pub fn apply_t_transforms(x: &[f64], chain: &[TTransform]) -> Vec<f64> {
    let mut v = x.to_vec();
    for step in chain {
        let (xi, xj) = (v[step.i], v[step.j]);
        v[step.i] = step.t * xi + (1.0 - step.t) * xj;
        v[step.j] = (1.0 - step.t) * xi + step.t * xj;
    }
    v
}

/// The doubly stochastic matrix of a single T-transform.
fn t_transform_matrix(d: usize, step: &TTransform) -> DMatrix<f64> {
    let mut m = DMatrix::<f64>::identity(d, d);
    m[(step.i, step.i)] = step.t;
    m[(step.j, step.j)] = step.t;
    m[(step.i, step.j)] = 1.0 - step.t;
    m[(step.j, step.i)] = 1.0 - step.t;
    m
}

/// Product of the chain's factors, applied left to right: `T_L ⋯ T_1`.
pub fn chain_to_doubly_stochastic(d: usize, chain: &[TTransform]) -> DMatrix<f64> {
    let mut acc = DMatrix::<f64>::identity(d, d);
    for step in chain {
        acc = t_transform_matrix(d, step) * acc;
    }
    acc
}

/// Greedy Birkhoff decomposition of a doubly stochastic matrix into at most
/// (d−1)²+1 permutation terms: repeatedly find a perfect matching on the
/// positive support and subtract the minimal matched entry.
pub fn birkhoff_decompose(matrix: &DMatrix<f64>) -> Result<Vec<BirkhoffTerm>> {
    let d = matrix.nrows();
    if matrix.ncols() != d {
        return Err(Error::NotSquare {
            rows: d,
            cols: matrix.ncols(),
        });
    }
    let mut defect = 0.0f64;
    for i in 0..d {
        let row: f64 = (0..d).map(|j| matrix[(i, j)]).sum();
        let col: f64 = (0..d).map(|j| matrix[(j, i)]).sum();
        defect = defect.max((row - 1.0).abs()).max((col - 1.0).abs());
        for j in 0..d {
            if matrix[(i, j)] < -1e-12 {
                defect = defect.max(-matrix[(i, j)]);
            }
        }
    }
    if defect > tol::DOUBLY_STOCHASTIC {
        return Err(Error::InvalidArgument(format!(
            "matrix is not doubly stochastic: defect {defect:.3e}"
        )));
    }

    let mut residual = matrix.clone();
    let mut remaining = 1.0f64;
    let mut terms: Vec<BirkhoffTerm> = Vec::new();
    let support = 1e-12;

    while remaining > tol::BIRKHOFF_RECONSTRUCTION / 10.0 {
        let matching = perfect_matching(&residual, support * remaining.max(support))
            .ok_or(Error::BirkhoffNoMatching)?;
        let weight = matching
            .iter()
            .enumerate()
            .map(|(col, &row)| residual[(row, col)])
            .fold(f64::INFINITY, f64::min);
        if !(weight > 0.0) {
            return Err(Error::BirkhoffNoMatching);
        }
        let weight = weight.min(remaining);
        // Column-indexed matching row[col] -> permutation perm[row] = col is
        // the map e_row ↦ e_? ; we store perm with P e_j = e_{perm[j]}:
        // matching[col] = row means entry (row, col) used, i.e. perm[col] = row.
        let mut permutation = vec![0usize; d];
        for (col, &row) in matching.iter().enumerate() {
            permutation[col] = row;
            residual[(row, col)] -= weight;
        }
        terms.push(BirkhoffTerm {
            weight,
            permutation,
        });
        remaining -= weight;
        if terms.len() > d * d + 1 {
            return Err(Error::BirkhoffNoMatching);
        }
    }
    // Fold the tail mass into the heaviest term so weights sum to one.
    if remaining != 0.0 {
        if let Some(top) = terms
            .iter_mut()
            .max_by(|a, b| a.weight.partial_cmp(&b.weight).expect("finite weight"))
        {
            top.weight += remaining;
        }
    }
    Ok(terms)
}

/// Augmenting-path bipartite matching on entries above `threshold`.
/// Returns `row_of_column[col]` on success.
fn perfect_matching(m: &DMatrix<f64>, threshold: f64) -> Option<Vec<usize>> {
    let d = m.nrows();
    let mut row_of_col = vec![usize::MAX; d];
    let mut col_of_row = vec![usize::MAX; d];

    fn try_augment(
        m: &DMatrix<f64>,
        threshold: f64,
        row: usize,
        visited: &mut [bool],
        row_of_col: &mut [usize],
        col_of_row: &mut [usize],
    ) -> bool {
        let d = m.nrows();
        for col in 0..d {
            if m[(row, col)] > threshold && !visited[col] {
                visited[col] = true;
                if row_of_col[col] == usize::MAX
                    || try_augment(m, threshold, row_of_col[col], visited, row_of_col, col_of_row)
                {
                    row_of_col[col] = row;
                    col_of_row[row] = col;
                    return true;
                }
            }
        }
        false
    }

    for row in 0..d {
        let mut visited = vec![false; d];
        if !try_augment(m, threshold, row, &mut visited, &mut row_of_col, &mut col_of_row) {
            return None;
        }
    }
    Some(row_of_col)
}

/// Reconstructs Σ w_m P_m from Birkhoff terms.
pub fn birkhoff_reconstruct(d: usize, terms: &[BirkhoffTerm]) -> DMatrix<f64> {
    let mut acc = DMatrix::<f64>::zeros(d, d);
    for term in terms {
        for (col, &row) in term.permutation.iter().enumerate() {
            acc[(row, col)] += term.weight;
        }
    }
    acc
}

/// Builds the full mixed-unitary conversion certificate for ρ → σ.
///
/// Fails with a not-convertible error (carrying the majorisation report)
/// when ρ does not majorise σ.
pub fn build_mixed_unitary_certificate(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
) -> Result<ConversionCertificate> {
    let report = majorises(rho, sigma)?;
    if !report.holds {
        return Err(Error::NotConvertible { report });
    }
    let d = rho.dim();
    let chain = t_transform_chain(rho.spectrum(), sigma.spectrum())?;
    let ds = chain_to_doubly_stochastic(d, &chain);
    let terms = birkhoff_decompose(&ds)?;

    let cert = ConversionCertificate {
        doubly_stochastic: ds,
        birkhoff_terms: terms,
        basis_in: rho.eigenbasis().clone(),
        basis_out: sigma.eigenbasis().clone(),
    };

    // Transported-spectrum invariant: D ρ↓ = σ↓.
    let carried = &cert.doubly_stochastic
        * nalgebra::DVector::from_column_slice(rho.spectrum().values());
    for (got, want) in carried.iter().zip(sigma.spectrum().values()) {
        if (got - want).abs() > tol::CERTIFICATE_SPECTRUM {
            return Err(Error::EighFailed {
                dim: d,
                residual: Some((got - want).abs()),
            });
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{sample_hs_state, sample_majorising_pair};
    use approx::assert_abs_diff_eq;

    fn spectrum(values: &[f64]) -> Spectrum {
        Spectrum::from_unsorted(values.to_vec())
    }

    #[test]
    fn pure_state_majorises_everything() {
        let pure = DensityMatrix::from_probabilities(&[1.0, 0.0, 0.0]).unwrap();
        let any = sample_hs_state(3, 3);
        assert!(majorises(&pure, &any).unwrap().holds);
    }

    #[test]
    fn everything_majorises_uniform() {
        let any = sample_hs_state(4, 4);
        let uniform = DensityMatrix::maximally_mixed(4);
        assert!(majorises(&any, &uniform).unwrap().holds);
    }

    #[test]
    fn partial_sum_gaps_example() {
        let rho = DensityMatrix::from_probabilities(&[0.5, 0.3, 0.2]).unwrap();
        let sigma = DensityMatrix::from_probabilities(&[0.4, 0.35, 0.25]).unwrap();
        let report = majorises(&rho, &sigma).unwrap();
        assert!(report.holds);
        assert_eq!(report.partial_sum_gaps.len(), 2);
        assert_abs_diff_eq!(report.partial_sum_gaps[0], 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(report.partial_sum_gaps[1], 0.05, epsilon = 1e-12);
        assert_eq!(report.worst_k, Some(1));
    }

    #[test]
    fn majorisation_dimension_mismatch() {
        let a = DensityMatrix::maximally_mixed(2);
        let b = DensityMatrix::maximally_mixed(3);
        assert!(matches!(
            majorises(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn chain_for_identical_spectra_is_empty() {
        let x = spectrum(&[0.5, 0.3, 0.2]);
        assert!(t_transform_chain(&x, &x).unwrap().is_empty());
    }

    #[test]
    fn chain_single_transform_qubit() {
        // Solve 0.6 = t·0.75 + (1−t)·0.25 gives t = 0.7.
        let x = spectrum(&[0.75, 0.25]);
        let y = spectrum(&[0.6, 0.4]);
        let chain = t_transform_chain(&x, &y).unwrap();
        assert_eq!(chain.len(), 1);
        assert_abs_diff_eq!(chain[0].t, 0.7, epsilon = 1e-12);
        assert_eq!((chain[0].i, chain[0].j), (0, 1));
    }

    #[test]
    fn chain_replay_on_random_pairs() {
        for seed in 0..200u64 {
            let d = 2 + (seed % 5) as usize;
            let (rho, sigma) = sample_majorising_pair(d, seed);
            let chain = t_transform_chain(rho.spectrum(), sigma.spectrum()).unwrap();
            assert!(chain.len() <= d - 1, "chain too long for d={d}");
            for step in &chain {
                assert!(step.t >= 0.5 - 1e-12 && step.t <= 1.0 + 1e-12);
            }
            let replay = apply_t_transforms(rho.spectrum().values(), &chain);
            for (got, want) in replay.iter().zip(sigma.spectrum().values()) {
                assert_abs_diff_eq!(got, want, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn chain_rejects_non_majorising_input() {
        let x = spectrum(&[0.6, 0.4]);
        let y = spectrum(&[0.8, 0.2]);
        match t_transform_chain(&x, &y).unwrap_err() {
            Error::NotMajorising { k, shortfall } => {
                assert_eq!(k, 0);
                assert!(shortfall > 0.19);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn birkhoff_identity() {
        let terms = birkhoff_decompose(&DMatrix::identity(3, 3)).unwrap();
        assert_eq!(terms.len(), 1);
        assert_abs_diff_eq!(terms[0].weight, 1.0, epsilon = 1e-12);
        assert_eq!(terms[0].permutation, vec![0, 1, 2]);
    }

    #[test]
    fn birkhoff_two_by_two() {
        let m = DMatrix::from_row_slice(2, 2, &[0.8, 0.2, 0.2, 0.8]);
        let mut terms = birkhoff_decompose(&m).unwrap();
        terms.sort_by(|a, b| b.weight.partial_cmp(&a.weight).unwrap());
        assert_eq!(terms.len(), 2);
        assert_abs_diff_eq!(terms[0].weight, 0.8, epsilon = 1e-12);
        assert_eq!(terms[0].permutation, vec![0, 1]);
        assert_abs_diff_eq!(terms[1].weight, 0.2, epsilon = 1e-12);
        assert_eq!(terms[1].permutation, vec![1, 0]);
    }

    #[test]
    fn birkhoff_reconstructs_t_transform_products() {
        for seed in 0..100u64 {
            let d = 2 + (seed % 5) as usize;
            let (rho, sigma) = sample_majorising_pair(d, 1000 + seed);
            let chain = t_transform_chain(rho.spectrum(), sigma.spectrum()).unwrap();
            let ds = chain_to_doubly_stochastic(d, &chain);
            let terms = birkhoff_decompose(&ds).unwrap();
            assert!(terms.len() <= (d - 1) * (d - 1) + 1, "too many terms");
            let weight_sum: f64 = terms.iter().map(|t| t.weight).sum();
            assert_abs_diff_eq!(weight_sum, 1.0, epsilon = 1e-9);
            let rebuilt = birkhoff_reconstruct(d, &terms);
            assert!((rebuilt - ds).norm() < 1e-8);
        }
    }

    #[test]
    fn birkhoff_rejects_non_stochastic() {
        let m = DMatrix::from_row_slice(2, 2, &[0.9, 0.2, 0.2, 0.8]);
        assert!(birkhoff_decompose(&m).is_err());
    }

    #[test]
    fn certificate_identity_conversion() {
        let rho = sample_hs_state(3, 8);
        let cert = build_mixed_unitary_certificate(&rho, &rho).unwrap();
        assert!((&cert.doubly_stochastic - DMatrix::<f64>::identity(3, 3)).norm() < 1e-12);
        assert_eq!(cert.birkhoff_terms.len(), 1);
        let out = cert.apply(&rho).unwrap();
        assert!(out.trace_distance(&rho).unwrap() < 1e-10);
    }

    #[test]
    fn certificate_qubit_example() {
        let rho = DensityMatrix::from_probabilities(&[0.75, 0.25]).unwrap();
        let sigma = DensityMatrix::from_probabilities(&[0.6, 0.4]).unwrap();
        let cert = build_mixed_unitary_certificate(&rho, &sigma).unwrap();
        let expected = DMatrix::from_row_slice(2, 2, &[0.7, 0.3, 0.3, 0.7]);
        assert!((&cert.doubly_stochastic - expected).norm() < 1e-12);
        let weights: Vec<f64> = cert.birkhoff_terms.iter().map(|t| t.weight).collect();
        assert_eq!(weights.len(), 2);
        assert!(weights.iter().any(|w| (w - 0.7).abs() < 1e-12));
        assert!(weights.iter().any(|w| (w - 0.3).abs() < 1e-12));
    }

    #[test]
    fn certificate_channel_soundness_and_unitality() {
        for seed in 0..100u64 {
            let d = 2 + (seed % 5) as usize;
            let (rho, sigma) = sample_majorising_pair(d, 5000 + seed);
            let cert = build_mixed_unitary_certificate(&rho, &sigma).unwrap();
            assert!(cert.stochasticity_defect() < 1e-9);
            let out = cert.apply(&rho).unwrap();
            let err = HermitianMatrix::new(out.matrix().data() - sigma.matrix().data())
                .unwrap()
                .one_norm()
                .unwrap();
            assert!(err < 1e-7, "channel reproduction error {err} at d={d}");

            let uniform = DensityMatrix::maximally_mixed(d);
            let fixed = cert.apply(&uniform).unwrap();
            let unital_err = HermitianMatrix::new(fixed.matrix().data() - uniform.matrix().data())
                .unwrap()
                .one_norm()
                .unwrap();
            assert!(unital_err < 1e-9, "unitality error {unital_err} at d={d}");
        }
    }

    #[test]
    fn certificate_rejects_non_majorising() {
        let rho = DensityMatrix::maximally_mixed(2);
        let sigma = DensityMatrix::from_probabilities(&[0.9, 0.1]).unwrap();
        assert!(matches!(
            build_mixed_unitary_certificate(&rho, &sigma),
            Err(Error::NotConvertible { .. })
        ));
    }

    #[test]
    fn majorisation_transitivity_on_samples() {
        for seed in 0..50u64 {
            let d = 3 + (seed % 3) as usize;
            let (rho, sigma) = sample_majorising_pair(d, 7000 + seed);
            // tau: partial T-chain from sigma toward uniform, so sigma ≻ tau.
            let chain = t_transform_chain(
                sigma.spectrum(),
                DensityMatrix::maximally_mixed(d).spectrum(),
            )
            .unwrap();
            let prefix: Vec<TTransform> =
                chain.iter().take(chain.len() / 2 + 1).cloned().collect();
            let mixed = apply_t_transforms(sigma.spectrum().values(), &prefix);
            let tau = DensityMatrix::from_probabilities(&mixed).unwrap();
            assert!(majorises(&rho, &sigma).unwrap().holds);
            assert!(majorises(&sigma, &tau).unwrap().holds);
            assert!(majorises(&rho, &tau).unwrap().holds);
        }
    }
}
