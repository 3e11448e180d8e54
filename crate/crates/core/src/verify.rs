//! Reproducible property suites behind the CLI `verify` command.
//!
//! Each suite runs `n` seeded cases per property and reports per-property
//! failure counts; results are deterministic under `(seed, n)` regardless of
//! thread count because every case derives its own RNG stream.

use rayon::prelude::*;
use serde::Serialize;

use crate::conversion::{falsification_check, nielsen_locc_check, unital_convertible};
use crate::hermitian::{sample_haar_unitary, HermitianMatrix};
use crate::majorisation::{
    birkhoff_decompose, birkhoff_reconstruct, build_mixed_unitary_certificate,
    chain_to_doubly_stochastic, majorises, majorises_spectra, t_transform_chain,
};
use crate::sampling::{
    sample_boundary_tied_pair, sample_bounded_hamiltonian, sample_hs_state,
    sample_majorising_pair, sample_mixed_unitary_channel, sample_pure_bipartite,
};
use crate::states::{reduced_state, DensityMatrix};
use crate::thermo::{delta, delta_mu_assisted, thermal_state, work, work_inf};
use crate::tol;
use crate::witness::{
    free_set_max_delta, resource_measure, witness_search, AscentConfig, FreeSet, SamplingPlan,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Thermo,
    Majorisation,
    Conversion,
    Witness,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thermo" => Ok(Suite::Thermo),
            "majorisation" => Ok(Suite::Majorisation),
            "conversion" => Ok(Suite::Conversion),
            "witness" => Ok(Suite::Witness),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!(
                "unknown suite '{other}' (expected thermo, majorisation, conversion, witness, all)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub n: usize,
    pub properties: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }

    pub fn vacuous(&self) -> bool {
        self.properties.iter().all(|p| p.cases == 0)
    }
}

/// Runs one suite (or all of them). `corrupt_tolerance` is a harness
/// self-test hook: it replaces the boundary-verdict threshold with an
/// impossible one so the conversion suite must fail.
pub fn run_suite(suite: Suite, seed: u64, n: usize, corrupt_tolerance: bool) -> Vec<SuiteReport> {
    match suite {
        Suite::Thermo => vec![thermo_suite(seed, n)],
        Suite::Majorisation => vec![majorisation_suite(seed, n)],
        Suite::Conversion => vec![conversion_suite(seed, n, corrupt_tolerance)],
        Suite::Witness => vec![witness_suite(seed, n)],
        Suite::All => vec![
            thermo_suite(seed, n),
            majorisation_suite(seed, n),
            conversion_suite(seed, n, corrupt_tolerance),
            witness_suite(seed, n),
        ],
    }
}

fn run_cases(name: &str, n: usize, case: impl Fn(u64) -> bool + Sync) -> PropertyOutcome {
    let failures = (0..n as u64)
        .into_par_iter()
        .filter(|&i| !case(i))
        .count();
    PropertyOutcome {
        name: name.to_string(),
        cases: n,
        failures,
    }
}

fn dims_cycle(i: u64, dims: &[usize]) -> usize {
    dims[(i % dims.len() as u64) as usize]
}

fn thermo_suite(seed: u64, n: usize) -> SuiteReport {
    let properties = vec![
        run_cases("closed_form_identity", n, |i| {
            let d = dims_cycle(i, &[2, 3, 4]);
            let rho = sample_hs_state(d, seed ^ (0x1000 + i));
            let h = match sample_bounded_hamiltonian(d, 0.0, 1.0, 1.0, seed ^ (0x2000 + i)) {
                Ok(h) => h,
                Err(_) => return false,
            };
            match delta(&rho, &h) {
                Ok(report) => report.consistency_gap < 1e-8,
                Err(_) => false,
            }
        }),
        run_cases("gap_linearity", n, |i| {
            let d = dims_cycle(i, &[2, 3, 4]);
            let rho = sample_hs_state(d, seed ^ (0x3000 + i));
            let sigma = sample_hs_state(d, seed ^ (0x4000 + i));
            let Ok(h) = sample_bounded_hamiltonian(d, 0.0, 1.0, 1.0, seed ^ (0x5000 + i)) else {
                return false;
            };
            let (Ok(a), Ok(b)) = (delta(&rho, &h), delta(&sigma, &h)) else {
                return false;
            };
            let Ok(diff) =
                HermitianMatrix::new(rho.matrix().data() - sigma.matrix().data())
            else {
                return false;
            };
            let Ok(lin) = h.matrix().trace_product(&diff) else {
                return false;
            };
            ((a.delta - b.delta) - lin).abs() < 1e-9
        }),
        run_cases("work_nonnegative_zero_at_equilibrium", n, |i| {
            let d = dims_cycle(i, &[2, 3, 4]);
            let rho = sample_hs_state(d, seed ^ (0x6000 + i));
            let Ok(h) = sample_bounded_hamiltonian(d, 0.0, 1.0, 1.0, seed ^ (0x7000 + i)) else {
                return false;
            };
            let (Ok(w), Ok(gamma)) = (work(&rho, &h), thermal_state(&h)) else {
                return false;
            };
            if w < 0.0 {
                return false;
            }
            let Ok(dist) = rho.trace_distance(&gamma) else {
                return false;
            };
            if w < 1e-12 && 2.0 * dist >= 1e-6 {
                return false;
            }
            work(&gamma, &h).map(|wg| wg < 1e-9).unwrap_or(false)
        }),
        run_cases("work_inf_unitary_invariance", n, |i| {
            let d = dims_cycle(i, &[2, 3, 4]);
            let rho = sample_hs_state(d, seed ^ (0x8000 + i));
            let u = sample_haar_unitary(d, seed ^ (0x9000 + i));
            let Ok(rotated) =
                HermitianMatrix::new(&u * rho.matrix().data() * u.adjoint())
                    .and_then(DensityMatrix::new)
            else {
                return false;
            };
            (work_inf(&rho, 1.0) - work_inf(&rotated, 1.0)).abs() < 1e-9
        }),
        run_cases("assisted_value_dominates_unitary_orbit", n, |i| {
            let d = dims_cycle(i, &[2, 3]);
            let rho = sample_hs_state(d, seed ^ (0xa000 + i));
            let Ok(h) = sample_bounded_hamiltonian(d, 0.0, 1.0, 1.0, seed ^ (0xb000 + i)) else {
                return false;
            };
            let Ok(assisted) = delta_mu_assisted(&rho, &h) else {
                return false;
            };
            for trial in 0..20u64 {
                let u = sample_haar_unitary(d, seed ^ (0xc000 + 31 * i + trial));
                let Ok(rotated) =
                    HermitianMatrix::new(&u * rho.matrix().data() * u.adjoint())
                        .and_then(DensityMatrix::new)
                else {
                    return false;
                };
                match delta(&rotated, &h) {
                    Ok(r) if r.delta <= assisted + 1e-9 => {}
                    _ => return false,
                }
            }
            // Alignment into the energy eigenbasis attains the value.
            let Ok(aligned) =
                crate::states::reorder_descending(&rho, &h.decomposition().vectors)
            else {
                return false;
            };
            match delta(&aligned, &h) {
                Ok(r) => (r.delta - assisted).abs() < 1e-6,
                Err(_) => false,
            }
        }),
    ];
    SuiteReport {
        suite: "thermo".into(),
        seed,
        n,
        properties,
    }
}

fn majorisation_suite(seed: u64, n: usize) -> SuiteReport {
    let properties = vec![
        run_cases("t_transform_chain_replay", n, |i| {
            let d = 2 + (i % 5) as usize;
            let (rho, sigma) = sample_majorising_pair(d, seed ^ (0x11000 + i));
            let Ok(chain) = t_transform_chain(rho.spectrum(), sigma.spectrum()) else {
                return false;
            };
            if chain.len() > d - 1 {
                return false;
            }
            let replay =
                crate::majorisation::apply_t_transforms(rho.spectrum().values(), &chain);
            replay
                .iter()
                .zip(sigma.spectrum().values())
                .all(|(a, b)| (a - b).abs() < 1e-9)
        }),
        run_cases("birkhoff_reconstruction", n, |i| {
            let d = 2 + (i % 5) as usize;
            let (rho, sigma) = sample_majorising_pair(d, seed ^ (0x12000 + i));
            let Ok(chain) = t_transform_chain(rho.spectrum(), sigma.spectrum()) else {
                return false;
            };
            let ds = chain_to_doubly_stochastic(d, &chain);
            let Ok(terms) = birkhoff_decompose(&ds) else {
                return false;
            };
            if terms.len() > (d - 1) * (d - 1) + 1 {
                return false;
            }
            let weight_sum: f64 = terms.iter().map(|t| t.weight).sum();
            if (weight_sum - 1.0).abs() > 1e-9 {
                return false;
            }
            (birkhoff_reconstruct(d, &terms) - ds).norm() < tol::BIRKHOFF_RECONSTRUCTION
        }),
        run_cases("certificate_soundness", n, |i| {
            let d = 2 + (i % 5) as usize;
            let (rho, sigma) = sample_majorising_pair(d, seed ^ (0x13000 + i));
            let Ok(cert) = build_mixed_unitary_certificate(&rho, &sigma) else {
                return false;
            };
            let Ok(out) = cert.apply(&rho) else {
                return false;
            };
            let Ok(diff) =
                HermitianMatrix::new(out.matrix().data() - sigma.matrix().data())
            else {
                return false;
            };
            diff.one_norm().map(|e| e < tol::CERTIFICATE_CHANNEL).unwrap_or(false)
        }),
        run_cases("certificate_unitality", n, |i| {
            let d = 2 + (i % 5) as usize;
            let (rho, sigma) = sample_majorising_pair(d, seed ^ (0x14000 + i));
            let Ok(cert) = build_mixed_unitary_certificate(&rho, &sigma) else {
                return false;
            };
            let uniform = DensityMatrix::maximally_mixed(d);
            let Ok(fixed) = cert.apply(&uniform) else {
                return false;
            };
            let Ok(diff) =
                HermitianMatrix::new(fixed.matrix().data() - uniform.matrix().data())
            else {
                return false;
            };
            diff.one_norm().map(|e| e < 1e-9).unwrap_or(false)
        }),
        run_cases("transitivity", n, |i| {
            let d = 2 + (i % 4) as usize;
            let (rho, sigma) = sample_majorising_pair(d, seed ^ (0x15000 + i));
            // tau: push sigma's spectrum partway toward uniform, so σ ≻ τ.
            let Ok(chain) = t_transform_chain(
                sigma.spectrum(),
                DensityMatrix::maximally_mixed(d).spectrum(),
            ) else {
                return false;
            };
            let prefix: Vec<_> = chain.iter().take(chain.len().div_ceil(2)).cloned().collect();
            let mixed =
                crate::majorisation::apply_t_transforms(sigma.spectrum().values(), &prefix);
            let Ok(tau) = DensityMatrix::from_probabilities(&mixed) else {
                return false;
            };
            [
                majorises(&rho, &sigma),
                majorises(&sigma, &tau),
                majorises(&rho, &tau),
            ]
            .iter()
            .all(|r| r.as_ref().map(|rep| rep.holds).unwrap_or(false))
        }),
    ];
    SuiteReport {
        suite: "majorisation".into(),
        seed,
        n,
        properties,
    }
}

fn conversion_suite(seed: u64, n: usize, corrupt_tolerance: bool) -> SuiteReport {
    // Harness self-test: an intentionally impossible verdict threshold.
    let boundary_threshold = if corrupt_tolerance { 1e-3 } else { -tol::MAJORISATION_SLACK };

    let properties = vec![
        run_cases("verdict_routes_agree", n, |i| {
            let d = 2 + (i % 5) as usize;
            let (rho, sigma) = if i % 2 == 0 {
                let a = sample_hs_state(d, seed ^ (0x21000 + i));
                let b = sample_hs_state(d, seed ^ (0x22000 + i));
                (a, b)
            } else {
                sample_majorising_pair(d, seed ^ (0x23000 + i))
            };
            // unital_convertible errors out on route disagreement.
            let Ok(verdict) = unital_convertible(&rho, &sigma, 1.0) else {
                return false;
            };
            let Ok(partial) = majorises(&rho, &sigma) else {
                return false;
            };
            verdict.convertible == partial.holds
                && verdict.convertible == verdict.certificate.is_some()
        }),
        run_cases("boundary_pairs_convertible", n, move |i| {
            let d = 2 + (i % 5) as usize;
            let (rho, sigma) = sample_boundary_tied_pair(d, seed ^ (0x24000 + i));
            let Ok(verdict) = unital_convertible(&rho, &sigma, 1.0) else {
                return false;
            };
            let holds_at_threshold = verdict
                .delta_gaps
                .iter()
                .all(|&g| g >= boundary_threshold);
            verdict.convertible && holds_at_threshold && verdict.majorisation_report.boundary
        }),
        run_cases("verdict_scale_invariance", n, |i| {
            let d = 2 + (i % 5) as usize;
            let rho = sample_hs_state(d, seed ^ (0x25000 + i));
            let sigma = sample_hs_state(d, seed ^ (0x26000 + i));
            let mut verdicts = Vec::new();
            for omega in [1e-3, 1.0, 1e3] {
                match unital_convertible(&rho, &sigma, omega) {
                    Ok(v) => verdicts.push(v.convertible),
                    Err(_) => return false,
                }
            }
            verdicts.windows(2).all(|w| w[0] == w[1])
        }),
        run_cases("falsification_respects_majorisation", n, |i| {
            let d = 2 + (i % 4) as usize;
            let (rho, sigma) = sample_majorising_pair(d, seed ^ (0x27000 + i));
            match falsification_check(&rho, &sigma, 0.0, 1.0, 50, seed ^ (0x28000 + i)) {
                Ok(report) => !report.found_violation(),
                Err(_) => false,
            }
        }),
        run_cases("falsification_finds_counterexample", n, |i| {
            let d = 2 + (i % 4) as usize;
            let rho = sample_hs_state(d, seed ^ (0x29000 + i));
            let sigma = sample_hs_state(d, seed ^ (0x2a000 + i));
            let Ok(report) = majorises(&rho, &sigma) else {
                return false;
            };
            if report.holds {
                return true; // nothing to falsify
            }
            match falsification_check(&rho, &sigma, 0.0, 1.0, 1, seed ^ (0x2b000 + i)) {
                Ok(r) => {
                    r.found_violation()
                        && r.first_violation
                            .map(|w| w.from_deterministic_sweep)
                            .unwrap_or(false)
                }
                Err(_) => false,
            }
        }),
        run_cases("nielsen_matches_schmidt_majorisation", n, |i| {
            let d = dims_cycle(i, &[2, 3, 4]);
            let psi = sample_pure_bipartite(d, seed ^ (0x2c000 + i));
            let phi = sample_pure_bipartite(d, seed ^ (0x2d000 + i));
            let Ok(verdict) = nielsen_locc_check(&psi, &phi, 1.0) else {
                return false;
            };
            let (Ok(psi_red), Ok(phi_red)) = (reduced_state(&psi), reduced_state(&phi)) else {
                return false;
            };
            let direct = majorises_spectra(phi_red.spectrum(), psi_red.spectrum());
            verdict.convertible == direct.holds
        }),
    ];
    SuiteReport {
        suite: "conversion".into(),
        seed,
        n,
        properties,
    }
}

fn witness_suite(seed: u64, n: usize) -> SuiteReport {
    let properties = vec![
        run_cases("singleton_witness_analytic_gap", n, |i| {
            let d = 2 + (i % 3) as usize;
            let rho = sample_hs_state(d, seed ^ (0x31000 + i));
            let free = FreeSet::maximally_mixed(d);
            let Ok(result) = witness_search(&rho, &free, 0.0, 1.0, &AscentConfig::default())
            else {
                return false;
            };
            let Ok(diff) = HermitianMatrix::new(
                rho.matrix().data() - DensityMatrix::maximally_mixed(d).matrix().data(),
            ) else {
                return false;
            };
            let Ok(norm) = diff.one_norm() else {
                return false;
            };
            result.found == (norm / 2.0 > tol::WITNESS_GAP)
                && (result.gap - norm / 2.0).abs() < 1e-9
        }),
        run_cases("witness_soundness_recomputed", n, |i| {
            let d = 3;
            let rho = sample_hs_state(d, seed ^ (0x32000 + i));
            let free = match FreeSet::new(
                "trio",
                vec![
                    sample_hs_state(d, seed ^ (0x33000 + i)),
                    sample_hs_state(d, seed ^ (0x34000 + i)),
                    sample_hs_state(d, seed ^ (0x35000 + i)),
                ],
            ) {
                Ok(f) => f,
                Err(_) => return false,
            };
            let Ok(result) = witness_search(&rho, &free, 0.1, 1.0, &AscentConfig::default())
            else {
                return false;
            };
            if !result.found {
                return !result.inconclusive;
            }
            let h = result.hamiltonian.as_ref().unwrap();
            for &e in h.energies_descending().values() {
                if !(0.1 - 1e-9..=1.0 + 1e-9).contains(&e) {
                    return false;
                }
            }
            let (Ok(own), Ok(best_free)) = (delta(&rho, h), free_set_max_delta(&free, h)) else {
                return false;
            };
            own.delta - best_free > 0.0
        }),
        run_cases("measure_zero_on_free_state", n, |i| {
            let d = 2 + (i % 3) as usize;
            let plan = SamplingPlan {
                n_random: 64,
                seed: seed ^ (0x36000 + i),
            };
            match resource_measure(&DensityMatrix::maximally_mixed(d), 0.1, 1.0, &plan) {
                Ok(report) => report.value < 1e-9,
                Err(_) => false,
            }
        }),
        run_cases("measure_monotone_under_channels", n, |i| {
            let d = 2 + (i % 2) as usize;
            let rho = sample_hs_state(d, seed ^ (0x37000 + i));
            let plan = SamplingPlan {
                n_random: 64,
                seed: seed ^ (0x38000 + i),
            };
            let Ok(m_rho) = resource_measure(&rho, 0.1, 1.0, &plan) else {
                return false;
            };
            for c in 0..5u64 {
                let channel = sample_mixed_unitary_channel(d, seed ^ (0x39000 + 11 * i + c));
                let Ok(out) = channel.apply(&rho) else {
                    return false;
                };
                match resource_measure(&out, 0.1, 1.0, &plan) {
                    Ok(m_out) if m_out.value <= m_rho.value + 1e-6 => {}
                    _ => return false,
                }
            }
            true
        }),
        run_cases("measure_positive_on_resourceful_state", n, |i| {
            let d = 2 + (i % 2) as usize;
            let rho = sample_hs_state(d, seed ^ (0x3a000 + i));
            let plan = SamplingPlan {
                n_random: 64,
                seed: seed ^ (0x3b000 + i),
            };
            match resource_measure(&rho, 0.1, 1.0, &plan) {
                Ok(report) => report.value > 0.0,
                Err(_) => false,
            }
        }),
    ];
    SuiteReport {
        suite: "witness".into(),
        seed,
        n,
        properties,
    }
}
