//! Theorem-level conversion deciders.
//!
//! `unital_convertible` runs two independent routes and cross-checks them:
//! the work-gap route evaluates Δ(ρ↓,H_k) − Δ(σ↓,H_k) over the two-level
//! family H_k through the thermo module, and the partial-sum route checks
//! majorisation directly. The two must agree; disagreement is reported as an
//! internal defect, never silently resolved. `falsification_check` hunts for
//! a bounded Hamiltonian disproving convertibility, and `nielsen_locc_check`
//! maps bipartite pure-state LOCC conversion onto the reversed reduced-state
//! test.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermitian::CMatrix;
use crate::majorisation::{build_mixed_unitary_certificate, majorises, ConversionCertificate, MajorisationReport};
use crate::sampling;
use crate::states::{reduced_state, reorder_descending, two_level_hamiltonian, DensityMatrix, PureBipartiteState};
use crate::thermo;
use crate::tol;

/// How a conversion verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConversionRoute {
    /// Unital / mixed-unitary conversion between mixed states.
    UnitalMu,
    /// LOCC conversion between bipartite pure states (reversed reduced-state
    /// majorisation; no certificate, protocol synthesis is out of scope).
    LoccPure,
}

/// Decision record for one conversion query.
#[derive(Debug, Clone, Serialize)]
pub struct ConversionVerdict {
    pub convertible: bool,
    pub via: ConversionRoute,
    /// Δ(ρ↓,H_k) − Δ(σ↓,H_k) for k = 0..d−2, in energy units (scales with ω).
    pub delta_gaps: Vec<f64>,
    pub majorisation_report: MajorisationReport,
    pub certificate: Option<ConversionCertificate>,
}

/// Decides ρ → σ under unital (equivalently mixed-unitary) channels.
///
/// The verdict threshold is applied to `gap/ω`, so it is invariant under
/// rescaling the probe energy ω. kBT drops out of the gaps entirely; the
/// internal probes use kBT = ω so the Boltzmann factors stay conditioned at
/// every probe scale.
pub fn unital_convertible(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    omega: f64,
) -> Result<ConversionVerdict> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "omega must be positive, got {omega}"
        )));
    }
    let d = rho.dim();
    let report = majorises(rho, sigma)?;

    let mut delta_gaps = Vec::with_capacity(d.saturating_sub(1));
    if d >= 2 {
        let basis = CMatrix::identity(d, d);
        let rho_sorted = reorder_descending(rho, &basis)?;
        let sigma_sorted = reorder_descending(sigma, &basis)?;
        for k in 0..=d - 2 {
            let h_k = two_level_hamiltonian(d, k, omega, omega)?;
            let gap = thermo::delta(&rho_sorted, &h_k)?.delta
                - thermo::delta(&sigma_sorted, &h_k)?.delta;
            delta_gaps.push(gap);
        }
    }

    let delta_route = delta_gaps
        .iter()
        .all(|&g| g / omega >= -tol::MAJORISATION_SLACK);
    let partial_sum_route = report.holds;
    if delta_route != partial_sum_route {
        return Err(Error::VerdictDisagreement {
            delta_route,
            partial_sum_route,
        });
    }

    let certificate = if partial_sum_route {
        Some(build_mixed_unitary_certificate(rho, sigma)?)
    } else {
        None
    };

    Ok(ConversionVerdict {
        convertible: partial_sum_route,
        via: ConversionRoute::UnitalMu,
        delta_gaps,
        majorisation_report: report,
        certificate,
    })
}

/// Where a falsifying Hamiltonian came from.
#[derive(Debug, Clone, Serialize)]
pub struct FalsificationWitness {
    /// Non-increasing spectrum of the violating Hamiltonian.
    pub spectrum: Vec<f64>,
    /// Assisted-value gap Δ_MU(ρ,H) − Δ_MU(σ,H); negative means violation.
    pub gap: f64,
    /// True when the witness came from the deterministic two-level sweep.
    pub from_deterministic_sweep: bool,
    /// Index within its family (level index k, or random-sample index).
    pub index: usize,
}

/// Report of a bounded-spectrum falsification run.
#[derive(Debug, Clone, Serialize)]
pub struct FalsificationReport {
    pub deterministic_checked: usize,
    pub random_checked: usize,
    pub violations: usize,
    pub first_violation: Option<FalsificationWitness>,
}

impl FalsificationReport {
    pub fn found_violation(&self) -> bool {
        self.violations > 0
    }
}

/// Samples Hamiltonians with `ε𝕀 ≤ H ≤ δ𝕀` hunting for a violation of the
/// assisted-value dominance Δ_MU(ρ,H) ≥ Δ_MU(σ,H); one violation disproves
/// ρ → σ under mixed-unitary channels.
///
/// The deterministic sweep (eigenvalues δ on the top k+1 levels and ε on the
/// rest) is checked first: when ρ does not majorise σ it is guaranteed to
/// contain a violating Hamiltonian. The random samples draw spectra i.i.d.
/// uniform from `[ε, δ]` with Haar eigenbases; the sweep is a falsifier, not
/// a decider, for the continuum of admissible Hamiltonians.
pub fn falsification_check(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    epsilon: f64,
    delta_max: f64,
    n_samples: usize,
    seed: u64,
) -> Result<FalsificationReport> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    if !(0.0 <= epsilon && epsilon < delta_max) {
        return Err(Error::InvalidArgument(format!(
            "energy scales must satisfy 0 <= epsilon < delta, got ({epsilon}, {delta_max})"
        )));
    }
    if n_samples == 0 {
        return Err(Error::InvalidArgument("n_samples must be at least 1".into()));
    }
    let d = rho.dim();
    let violation_tol = tol::MAJORISATION_SLACK * delta_max.abs().max(1.0);
    let gap_for = |energies_desc: &[f64]| -> f64 {
        thermo::assisted_value_from_spectra(rho.spectrum().values(), energies_desc, 1.0)
            - thermo::assisted_value_from_spectra(sigma.spectrum().values(), energies_desc, 1.0)
    };

    let mut violations = 0usize;
    let mut first_violation = None;

    let mut deterministic_checked = 0usize;
    for k in 0..d.saturating_sub(1) {
        let mut energies = vec![epsilon; d];
        for e in energies.iter_mut().take(k + 1) {
            *e = delta_max;
        }
        let gap = gap_for(&energies);
        deterministic_checked += 1;
        if gap < -violation_tol {
            violations += 1;
            if first_violation.is_none() {
                first_violation = Some(FalsificationWitness {
                    spectrum: energies,
                    gap,
                    from_deterministic_sweep: true,
                    index: k,
                });
            }
        }
    }

    for i in 0..n_samples {
        let h = sampling::sample_bounded_hamiltonian(
            d,
            epsilon,
            delta_max,
            1.0,
            seed.wrapping_add(i as u64),
        )?;
        let gap = gap_for(h.energies_descending().values());
        if gap < -violation_tol {
            violations += 1;
            if first_violation.is_none() {
                first_violation = Some(FalsificationWitness {
                    spectrum: h.energies_descending().values().to_vec(),
                    gap,
                    from_deterministic_sweep: false,
                    index: i,
                });
            }
        }
    }

    Ok(FalsificationReport {
        deterministic_checked,
        random_checked: n_samples,
        violations,
        first_violation,
    })
}

/// Thermodynamic Nielsen test: |ψ⟩ → |φ⟩ under LOCC iff ψ ≺ φ, i.e. the
/// reduced state of φ majorises the reduced state of ψ — note the direction
/// reversal relative to the mixed-state test.
pub fn nielsen_locc_check(
    psi: &PureBipartiteState,
    phi: &PureBipartiteState,
    omega: f64,
) -> Result<ConversionVerdict> {
    if psi.local_dim() != phi.local_dim() {
        return Err(Error::DimensionMismatch {
            left: psi.local_dim(),
            right: phi.local_dim(),
        });
    }
    let psi_reduced = reduced_state(psi)?;
    let phi_reduced = reduced_state(phi)?;
    let inner = unital_convertible(&phi_reduced, &psi_reduced, omega)?;
    Ok(ConversionVerdict {
        convertible: inner.convertible,
        via: ConversionRoute::LoccPure,
        delta_gaps: inner.delta_gaps,
        majorisation_report: inner.majorisation_report,
        certificate: None,
    })
}
