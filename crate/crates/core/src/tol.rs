//! Centralized numerical tolerances.
//!
//! The three user-tunable tolerances live in [`Tolerances`]; the remaining
//! constants are contract-level thresholds that tests and invariants pin.

/// Tunable tolerance record. Overridable from the CLI (`--tol` scales
/// `equality`); library constructors use [`Tolerances::default`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Largest Hermiticity violation accepted at construction before the
    /// input is rejected instead of symmetrized.
    pub construction: f64,
    /// Frobenius bound on `V diag(λ) V† − M` for an accepted
    /// eigendecomposition.
    pub reconstruction: f64,
    /// Generic equality threshold for value comparisons.
    pub equality: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            construction: 1e-8,
            reconstruction: 1e-9,
            equality: 1e-9,
        }
    }
}

/// Unitarity check bound, `‖U†U − I‖_max`.
pub const UNITARITY: f64 = 1e-10;

/// Trace-one check bound for density matrices.
pub const TRACE_ONE: f64 = 1e-10;

/// Eigenvalues in `[−PSD_CLAMP, 0)` are clamped to zero; anything more
/// negative rejects the state.
pub const PSD_CLAMP: f64 = 1e-10;

/// Orthonormality bound for user-supplied bases.
pub const ORTHONORMAL: f64 = 1e-10;

/// Frobenius-norm normalization bound for bipartite amplitude matrices.
/// Inputs within this of 1 are renormalized; beyond it they are rejected.
pub const AMPLITUDE_NORM: f64 = 1e-8;

/// σ-eigenvalues below this count as "no support" in relative entropy.
pub const SUPPORT_EIGENVALUE: f64 = 1e-12;

/// ρ-weight above this on a no-support direction makes D(ρ‖σ) infinite.
pub const SUPPORT_WEIGHT: f64 = 1e-10;

/// One-sided slack on majorisation partial sums: gaps ≥ −MAJORISATION_SLACK
/// count as holding.
pub const MAJORISATION_SLACK: f64 = 1e-10;

/// |gap| below this marks a boundary (tied partial sum) case.
pub const MAJORISATION_BOUNDARY: f64 = 1e-10;

/// Definition-vs-closed-form gap above this is an internal-consistency error.
pub const DELTA_CONSISTENCY_FAIL: f64 = 1e-6;

/// Doubly stochastic row/column sum bound.
pub const DOUBLY_STOCHASTIC: f64 = 1e-8;

/// Reconstruction bound for Birkhoff decompositions.
pub const BIRKHOFF_RECONSTRUCTION: f64 = 1e-8;

/// Transported-spectrum bound for conversion certificates.
pub const CERTIFICATE_SPECTRUM: f64 = 1e-8;

/// Trace-norm bound on `𝓝(ρ) − σ` for certificate channels.
pub const CERTIFICATE_CHANNEL: f64 = 1e-7;

/// Witness gaps above this count as found.
pub const WITNESS_GAP: f64 = 1e-9;

/// Hamiltonians whose spectral spread is below this are excluded from the
/// resource-measure maximization (the work ratio degenerates to 0/0 there).
pub const MEASURE_SPREAD_FLOOR: f64 = 1e-6;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_ordered() {
        let t = Tolerances::default();
        assert!(t.reconstruction < t.construction);
        assert!(SUPPORT_EIGENVALUE < SUPPORT_WEIGHT);
        assert!(CERTIFICATE_CHANNEL > CERTIFICATE_SPECTRUM / 10.0);
        assert!(MEASURE_SPREAD_FLOOR > WITNESS_GAP);
    }
}
