//! Error type shared by every module.

use thiserror::Error;

use crate::majorisation::MajorisationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("not Hermitian: max |M - M†| = {asymmetry:.3e} exceeds {limit:.3e}")]
    NotHermitian { asymmetry: f64, limit: f64 },

    #[error("trace is {trace:.12}, expected 1 within {limit:.3e}")]
    NotUnitTrace { trace: f64, limit: f64 },

    #[error("not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("basis is not orthonormal: max |B†B - I| = {deviation:.3e}")]
    NotOrthonormal { deviation: f64 },

    #[error("amplitude matrix norm {norm:.12} is not 1 within {limit:.3e}")]
    NotNormalized { norm: f64, limit: f64 },

    #[error("eigenvalue {value:.6} of Hamiltonian lies outside declared bounds [{lo}, {hi}]")]
    BoundsViolated { value: f64, lo: f64, hi: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigen-solver failed for {dim}x{dim} matrix (residual {residual:?})")]
    EighFailed { dim: usize, residual: Option<f64> },

    #[error("scalar function undefined at eigenvalue {eigenvalue}")]
    FunctionDomain { eigenvalue: f64 },

    #[error(
        "definition and closed form of the storage enhancement disagree: gap {gap:.3e} (limit {limit:.3e})"
    )]
    DeltaInconsistent { gap: f64, limit: f64 },

    #[error("spectrum does not majorise target: partial sum at k={k} short by {shortfall:.3e}")]
    NotMajorising { k: usize, shortfall: f64 },

    #[error("states are not convertible under unital channels")]
    NotConvertible { report: MajorisationReport },

    #[error("no positive perfect matching on the support; matrix is not doubly stochastic")]
    BirkhoffNoMatching,

    #[error(
        "work-gap verdict and partial-sum verdict disagree ({delta_route} vs {partial_sum_route}); this indicates a numerical defect"
    )]
    VerdictDisagreement {
        delta_route: bool,
        partial_sum_route: bool,
    },

    #[error("free set is empty")]
    EmptyFreeSet,

    #[error("inconclusive: {0}")]
    Inconclusive(String),
}
