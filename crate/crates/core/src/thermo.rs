//! Thermodynamic functionals: Gibbs states, relative entropy, extractable
//! work, the storage enhancement Δ with its closed form, and the assisted
//! variants for mixed-unitary and preparation-augmented operation sets.
//!
//! Internally everything runs in natural logarithms; energies are in the
//! units of the Hamiltonian entries (`kBT ln2 · bits = kBT · nats`). The
//! only bit-valued output is [`relative_entropy`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::states::{DensityMatrix, Hamiltonian};
use crate::tol;
use crate::witness::FreeSet;

/// Work bookkeeping for one `(ρ, H)` pair. `delta` is the definition route
/// `W − W_inf`; `delta_closed_form` is the trace/partition-function identity;
/// the gap between them is recorded as a perpetual runtime self-test.
#[derive(Debug, Clone, Serialize)]
pub struct WorkReport {
    pub w: f64,
    pub w_inf: f64,
    pub delta: f64,
    pub delta_closed_form: f64,
    pub consistency_gap: f64,
}

/// ln tr(e^{−H/kBT}) computed as a log-sum-exp over the energies.
pub fn ln_partition(energies: &[f64], kbt: f64) -> f64 {
    let top = energies
        .iter()
        .map(|&e| -e / kbt)
        .fold(f64::NEG_INFINITY, f64::max);
    let acc: f64 = energies.iter().map(|&e| (-e / kbt - top).exp()).sum();
    top + acc.ln()
}

/// Gibbs state `γ = e^{−H/kBT} / tr(e^{−H/kBT})`, full rank for finite kBT.
pub fn thermal_state(h: &Hamiltonian) -> Result<DensityMatrix> {
    let kbt = h.kbt();
    let e_min = h.min_energy();
    let weights: Vec<f64> = h
        .energies_descending()
        .values()
        .iter()
        .map(|&e| (-(e - e_min) / kbt).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    let probs: Vec<f64> = weights.iter().map(|w| w / z).collect();
    let matrix = h.decomposition().assemble(&probs);
    DensityMatrix::new(crate::hermitian::HermitianMatrix::new(matrix)?)
}

/// Umegaki relative entropy D(ρ‖σ) in natural logarithm units.
///
/// Returns `+∞` when ρ has weight above 1e-10 on a direction where σ's
/// eigenvalue is below 1e-12 (support violation); this is a value, not an
/// error, because callers must distinguish it from genuine failures.
pub fn relative_entropy_nats(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    let neg_entropy: f64 = rho
        .spectrum()
        .values()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.ln())
        .sum();

    // Weights of ρ in σ's eigenbasis: diagonal of V†ρV.
    let v = sigma.eigenbasis();
    let cross = v.adjoint() * rho.matrix().data() * v;
    let mut cross_term = 0.0;
    for (j, &q) in sigma.spectrum().values().iter().enumerate() {
        let w = cross[(j, j)].re.max(0.0);
        if q < tol::SUPPORT_EIGENVALUE {
            if w > tol::SUPPORT_WEIGHT {
                return Ok(f64::INFINITY);
            }
            // 0·log 0 convention on the joint null directions.
        } else {
            cross_term += w * q.ln();
        }
    }
    let value = neg_entropy - cross_term;
    debug_assert!(value > -1e-9, "relative entropy should be non-negative");
    Ok(value.max(0.0))
}

/// D(ρ‖σ) in bits.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    Ok(relative_entropy_nats(rho, sigma)? / std::f64::consts::LN_2)
}

/// Optimal extractable work `W(ρ,H) = kBT ln2 · D(ρ‖γ)` against a bath at
/// the Hamiltonian's temperature.
pub fn work(rho: &DensityMatrix, h: &Hamiltonian) -> Result<f64> {
    let gamma = thermal_state(h)?;
    Ok(h.kbt() * relative_entropy_nats(rho, &gamma)?)
}

/// Information-content work `W_inf(ρ) = W(ρ, H=0) = kBT·(ln d − S(ρ))`.
pub fn work_inf(rho: &DensityMatrix, kbt: f64) -> f64 {
    kbt * ((rho.dim() as f64).ln() - rho.entropy_nats())
}

/// Storage enhancement `Δ(ρ,H) = W(ρ,H) − W_inf(ρ)`, computed both from the
/// definition and from the closed form
/// `Δ = tr(Hρ) + kBT·ln tr(e^{−H/kBT}) − kBT·ln d`,
/// with the gap between the two routes recorded.
pub fn delta(rho: &DensityMatrix, h: &Hamiltonian) -> Result<WorkReport> {
    if rho.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: h.dim(),
        });
    }
    let w = work(rho, h)?;
    let w_inf = work_inf(rho, h.kbt());
    let value = w - w_inf;

    let kbt = h.kbt();
    let ln_z = ln_partition(h.energies_descending().values(), kbt);
    let closed =
        h.matrix().trace_product(rho.matrix())? + kbt * (ln_z - (h.dim() as f64).ln());

    let gap = (value - closed).abs();
    if !(gap <= tol::DELTA_CONSISTENCY_FAIL) {
        return Err(Error::DeltaInconsistent {
            gap,
            limit: tol::DELTA_CONSISTENCY_FAIL,
        });
    }
    Ok(WorkReport {
        w,
        w_inf,
        delta: value,
        delta_closed_form: closed,
        consistency_gap: gap,
    })
}

/// Best storage enhancement over the unitary orbit of ρ:
/// `Δ_MU(ρ,H) = Σ_i ρ_i↓ E_i↓(H) + kBT(ln Z − ln d)`, the passive-state
/// alignment value. Requires `H ≥ 0`.
pub fn delta_mu_assisted(rho: &DensityMatrix, h: &Hamiltonian) -> Result<f64> {
    if rho.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: h.dim(),
        });
    }
    let min_energy = h.min_energy();
    if min_energy < -tol::PSD_CLAMP {
        return Err(Error::NotPositive {
            min_eigenvalue: min_energy,
        });
    }
    Ok(assisted_value_from_spectra(
        rho.spectrum().values(),
        h.energies_descending().values(),
        h.kbt(),
    ))
}

/// Spectrum-level form of [`delta_mu_assisted`]: both inputs non-increasing.
pub fn assisted_value_from_spectra(state_desc: &[f64], energies_desc: &[f64], kbt: f64) -> f64 {
    debug_assert_eq!(state_desc.len(), energies_desc.len());
    let aligned: f64 = state_desc
        .iter()
        .zip(energies_desc)
        .map(|(p, e)| p * e)
        .sum();
    let d = energies_desc.len() as f64;
    aligned + kbt * (ln_partition(energies_desc, kbt) - d.ln())
}

/// Best Δ reachable with the minimal operation set generated by free-state
/// preparations and the identity: Δ is linear in the state, so the convex
/// maximization collapses to `max(Δ(ρ,H), max_{η ∈ extreme(F)} Δ(η,H))`.
pub fn delta_omin_assisted(rho: &DensityMatrix, h: &Hamiltonian, free: &FreeSet) -> Result<f64> {
    let own = delta(rho, h)?.delta;
    let mut best = own;
    for eta in free.extreme_points() {
        let v = delta(eta, h)?.delta;
        if v > best {
            best = v;
        }
    }
    Ok(best)
}
