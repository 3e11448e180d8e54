//! Quantum states and Hamiltonians: validation, cached spectra, bipartite
//! pure states, and the two-level Hamiltonian family.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermitian::{CMatrix, EigenDecomposition, HermitianMatrix, Spectrum};
use crate::tol;

/// A d×d density matrix: Hermitian, positive semidefinite, unit trace.
///
/// The eigendecomposition is computed once at construction. Eigenvalues in
/// `[−1e-10, 0)` are clamped to zero and the cached spectrum renormalized to
/// sum one, so downstream `x·log x` terms use a consistent `0·log 0 = 0`
/// convention; more negative eigenvalues reject the state.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
    spectrum: Spectrum,
    eigenbasis: CMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: HermitianMatrix) -> Result<Self> {
        let trace = matrix.trace();
        if (trace - 1.0).abs() > tol::TRACE_ONE {
            return Err(Error::NotUnitTrace {
                trace,
                limit: tol::TRACE_ONE,
            });
        }
        let decomposition = matrix.eigh()?;
        let min = *decomposition
            .values
            .values()
            .last()
            .expect("dimension is at least 1");
        if min < -tol::PSD_CLAMP {
            return Err(Error::NotPositive { min_eigenvalue: min });
        }
        let mut values: Vec<f64> = decomposition
            .values
            .values()
            .iter()
            .map(|&v| if v < 0.0 { 0.0 } else { v })
            .collect();
        let sum: f64 = values.iter().sum();
        if sum > 0.0 && sum != 1.0 {
            for v in values.iter_mut() {
                *v /= sum;
            }
        }
        Ok(Self {
            matrix,
            spectrum: Spectrum::from_sorted(values)?,
            eigenbasis: decomposition.vectors,
        })
    }

    /// Diagonal state from probabilities given in any order.
    pub fn from_probabilities(probs: &[f64]) -> Result<Self> {
        if probs.iter().any(|&p| p < -tol::PSD_CLAMP) {
            return Err(Error::NotPositive {
                min_eigenvalue: probs.iter().cloned().fold(f64::INFINITY, f64::min),
            });
        }
        Self::new(HermitianMatrix::from_real_diagonal(probs))
    }

    /// Pure state |v⟩⟨v| from a (normalized) complex vector.
    pub fn pure_from_vector(v: &[Complex64]) -> Result<Self> {
        let d = v.len();
        let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr.sqrt() - 1.0).abs() > tol::AMPLITUDE_NORM {
            return Err(Error::NotNormalized {
                norm: norm_sqr.sqrt(),
                limit: tol::AMPLITUDE_NORM,
            });
        }
        let m = CMatrix::from_fn(d, d, |i, j| v[i] * v[j].conj() / norm_sqr);
        Self::new(HermitianMatrix::new(m)?)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::from_probabilities(&vec![1.0 / dim as f64; dim])
            .expect("uniform diagonal state is always valid")
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    /// Clamped, renormalized eigenvalues in non-increasing order.
    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// Eigenvector columns aligned with [`Self::spectrum`].
    pub fn eigenbasis(&self) -> &CMatrix {
        &self.eigenbasis
    }

    /// Von Neumann entropy in nats, with 0·ln 0 = 0.
    pub fn entropy_nats(&self) -> f64 {
        -self
            .spectrum
            .values()
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| p * p.ln())
            .sum::<f64>()
    }

    pub fn purity(&self) -> f64 {
        self.spectrum.values().iter().map(|p| p * p).sum()
    }

    /// ‖ρ − σ‖₁ / 2.
    pub fn trace_distance(&self, other: &Self) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let diff = HermitianMatrix::new(self.matrix.data() - other.matrix.data())?;
        Ok(diff.one_norm()? / 2.0)
    }
}

/// A Hamiltonian with its thermal scale and optional declared spectral
/// bounds `ε𝕀 ≤ H ≤ δ𝕀`.
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    matrix: HermitianMatrix,
    kbt: f64,
    declared_bounds: Option<(f64, f64)>,
    decomposition: EigenDecomposition,
}

impl Hamiltonian {
    pub fn new(matrix: HermitianMatrix, kbt: f64) -> Result<Self> {
        Self::with_bounds(matrix, kbt, None)
    }

    pub fn with_bounds(
        matrix: HermitianMatrix,
        kbt: f64,
        declared_bounds: Option<(f64, f64)>,
    ) -> Result<Self> {
        if !(kbt > 0.0 && kbt.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "kBT must be positive and finite, got {kbt}"
            )));
        }
        if let Some((lo, hi)) = declared_bounds {
            if !(0.0 <= lo && lo < hi) {
                return Err(Error::InvalidArgument(format!(
                    "declared bounds must satisfy 0 <= lo < hi, got ({lo}, {hi})"
                )));
            }
        }
        let decomposition = matrix.eigh()?;
        if let Some((lo, hi)) = declared_bounds {
            for &v in decomposition.values.values() {
                if v < lo - tol::PSD_CLAMP || v > hi + tol::PSD_CLAMP {
                    return Err(Error::BoundsViolated { value: v, lo, hi });
                }
            }
        }
        Ok(Self {
            matrix,
            kbt,
            declared_bounds,
            decomposition,
        })
    }

    pub fn from_real_diagonal(diag: &[f64], kbt: f64) -> Result<Self> {
        Self::new(HermitianMatrix::from_real_diagonal(diag), kbt)
    }

    pub fn zero(dim: usize, kbt: f64) -> Result<Self> {
        Self::new(HermitianMatrix::zeros(dim), kbt)
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn kbt(&self) -> f64 {
        self.kbt
    }

    pub fn declared_bounds(&self) -> Option<(f64, f64)> {
        self.declared_bounds
    }

    /// Eigen-energies in non-increasing order, E↓.
    pub fn energies_descending(&self) -> &Spectrum {
        &self.decomposition.values
    }

    pub fn decomposition(&self) -> &EigenDecomposition {
        &self.decomposition
    }

    pub fn min_energy(&self) -> f64 {
        *self
            .decomposition
            .values
            .values()
            .last()
            .expect("dimension is at least 1")
    }
}

/// Bipartite pure state with equal local dimension `d`, stored as its d×d
/// amplitude matrix in the product basis (unit Frobenius norm).
#[derive(Debug, Clone)]
pub struct PureBipartiteState {
    local_dim: usize,
    amplitudes: CMatrix,
}

impl PureBipartiteState {
    /// Accepts amplitudes within `1e-8` of unit Frobenius norm and stores the
    /// exactly renormalized matrix.
    pub fn new(amplitudes: CMatrix) -> Result<Self> {
        let (rows, cols) = amplitudes.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::InvalidArgument("dimension must be at least 1".into()));
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > tol::AMPLITUDE_NORM {
            return Err(Error::NotNormalized {
                norm,
                limit: tol::AMPLITUDE_NORM,
            });
        }
        Ok(Self {
            local_dim: rows,
            amplitudes: amplitudes / Complex64::new(norm, 0.0),
        })
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn amplitudes(&self) -> &CMatrix {
        &self.amplitudes
    }

    /// Squared Schmidt coefficients (eigenvalues of the reduced state).
    pub fn schmidt_squares(&self) -> Result<Spectrum> {
        Ok(reduced_state(self)?.spectrum().clone())
    }
}

/// Rebuilds ρ as `Σ_i ρ_i↓ |b_i⟩⟨b_i|` in the given orthonormal basis:
/// diagonal with the eigenvalues in non-increasing order.
pub fn reorder_descending(rho: &DensityMatrix, basis: &CMatrix) -> Result<DensityMatrix> {
    let d = rho.dim();
    if basis.nrows() != d || basis.ncols() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: basis.nrows().max(basis.ncols()),
        });
    }
    let defect = crate::hermitian::unitarity_defect(basis);
    if defect > tol::ORTHONORMAL {
        return Err(Error::NotOrthonormal { deviation: defect });
    }
    let mut scaled = basis.clone();
    for (j, &p) in rho.spectrum().values().iter().enumerate() {
        let mut col = scaled.column_mut(j);
        col *= Complex64::new(p, 0.0);
    }
    let m = scaled * basis.adjoint();
    DensityMatrix::new(HermitianMatrix::new(m)?)
}

/// Reduced state of the first subsystem, `A·A†`.
pub fn reduced_state(psi: &PureBipartiteState) -> Result<DensityMatrix> {
    let a = psi.amplitudes();
    DensityMatrix::new(HermitianMatrix::new(a * a.adjoint())?)
}

/// The two-level family `H_k = ω Σ_{i=0}^{k} |i⟩⟨i|`: first `k+1` diagonal
/// entries ω, the rest 0, so the ground level is `(d−k−1)`-fold degenerate.
/// Declared bounds are `(0, ω)`.
pub fn two_level_hamiltonian(dim: usize, k: usize, omega: f64, kbt: f64) -> Result<Hamiltonian> {
    if dim < 2 {
        return Err(Error::InvalidArgument(format!(
            "two-level Hamiltonian needs dim >= 2, got {dim}"
        )));
    }
    if k > dim - 2 {
        return Err(Error::InvalidArgument(format!(
            "level index k={k} out of range 0..={}",
            dim - 2
        )));
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "omega must be positive, got {omega}"
        )));
    }
    let mut diag = vec![0.0; dim];
    for entry in diag.iter_mut().take(k + 1) {
        *entry = omega;
    }
    Hamiltonian::with_bounds(
        HermitianMatrix::from_real_diagonal(&diag),
        kbt,
        Some((0.0, omega)),
    )
}
