//! Work extraction as a decision procedure for quantum state conversions.
//!
//! The central quantity is the energy storage enhancement
//!
//! ```text
//! Δ(ρ, H) = W(ρ, H) − W_inf(ρ),
//! ```
//!
//! the change in extractable work when a fully degenerate Hamiltonian is
//! suddenly quenched to `H` while the system stays in `ρ`. Differences of Δ
//! over the two-level Hamiltonian family decide convertibility under unital
//! (equivalently mixed-unitary) channels, reproduce Nielsen's LOCC criterion
//! for bipartite pure states through local work extraction, witness resource
//! states against finitely generated free sets, and quantify resources via a
//! max-ratio measure.
//!
//! Module map:
//! - [`hermitian`]: Hermitian matrices, eigendecompositions, matrix functions,
//!   Haar-random unitaries.
//! - [`states`]: density matrices, Hamiltonians, bipartite pure states,
//!   spectra.
//! - [`thermo`]: Gibbs states, relative entropy, extractable work, Δ and its
//!   closed form, assisted variants.
//! - [`majorisation`]: majorisation tests and constructive mixed-unitary
//!   conversion certificates (T-transforms + Birkhoff decomposition).
//! - [`conversion`]: unital/mixed-unitary conversion verdicts, bounded-spectrum
//!   falsification sampling, the thermodynamic Nielsen test.
//! - [`witness`]: resource witnesses over bounded Hamiltonians and the
//!   work-ratio resource measure.
//! - [`sampling`]: seeded random states, Hamiltonians, and channels.
//! - [`verify`]: reproducible property suites used by the CLI `verify`
//!   command.
//!
//! All energies are reported in the same units as the Hamiltonian entries;
//! the thermal scale `kBT` is carried by [`states::Hamiltonian`] and defaults
//! to 1, making everything dimensionless unless the caller says otherwise.

pub mod conversion;
pub mod error;
pub mod hermitian;
pub mod majorisation;
pub mod sampling;
pub mod states;
pub mod thermo;
pub mod tol;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
pub use hermitian::{EigenDecomposition, HermitianMatrix, Spectrum};
pub use states::{DensityMatrix, Hamiltonian, PureBipartiteState};
