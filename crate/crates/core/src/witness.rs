//! Resource witnessing over spectrally bounded Hamiltonians and the
//! work-ratio resource measure.
//!
//! For a finitely generated free set F the witness objective is
//! `g(H) = min_j tr(H(ρ − η_j))` — by the closed-form identity the entropic
//! terms of Δ cancel in differences, so a strict Δ advantage over every free
//! state is exactly a positive `g`. The feasible set is the spectral box
//! `ε𝕀 ≤ H ≤ δ𝕀`; singleton free sets admit the exact optimizer
//! `H* = ε𝕀 + (δ−ε)·Π₊(ρ−η)` with gap `(δ−ε)·‖ρ−η‖₁/2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermitian::HermitianMatrix;
use crate::states::{DensityMatrix, Hamiltonian};
use crate::thermo;
use crate::tol;

/// Finitely generated free set: the convex hull of its extreme points.
#[derive(Debug, Clone)]
pub struct FreeSet {
    label: String,
    extreme_points: Vec<DensityMatrix>,
}

impl FreeSet {
    pub fn new(label: impl Into<String>, extreme_points: Vec<DensityMatrix>) -> Result<Self> {
        if extreme_points.is_empty() {
            return Err(Error::EmptyFreeSet);
        }
        let d = extreme_points[0].dim();
        for p in &extreme_points {
            if p.dim() != d {
                return Err(Error::DimensionMismatch {
                    left: d,
                    right: p.dim(),
                });
            }
        }
        Ok(Self {
            label: label.into(),
            extreme_points,
        })
    }

    /// The built-in singleton `{𝕀/d}` of informational non-equilibrium.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            label: "max-mixed".into(),
            extreme_points: vec![DensityMatrix::maximally_mixed(dim)],
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn extreme_points(&self) -> &[DensityMatrix] {
        &self.extreme_points
    }

    pub fn dim(&self) -> usize {
        self.extreme_points[0].dim()
    }
}

/// Projected supergradient ascent knobs. The step is `(δ−ε)/√k` with
/// best-iterate tracking; these are declared here rather than hidden.
#[derive(Debug, Clone, Copy)]
pub struct AscentConfig {
    pub iterations: usize,
}

impl Default for AscentConfig {
    fn default() -> Self {
        Self { iterations: 500 }
    }
}

/// Outcome of a witness search.
#[derive(Debug, Clone)]
pub struct WitnessResult {
    /// True when a Hamiltonian with a strictly positive gap was certified.
    pub found: bool,
    /// Best achieved `Δ(ρ,H) − max_η Δ(η,H)` (exact evaluation, not the
    /// optimizer's internal estimate).
    pub gap: f64,
    /// Ascent iterations performed (0 on the analytic singleton path).
    pub iterations: usize,
    /// True when the search exhausted its budget without either finding a
    /// witness or converging; distinguished from a clean "no witness".
    pub inconclusive: bool,
    /// The witnessing Hamiltonian when found, with declared bounds (ε, δ).
    pub hamiltonian: Option<Hamiltonian>,
}

/// Searches for `ε𝕀 ≤ H ≤ δ𝕀` with `Δ(ρ,H) > max_{η∈F} Δ(η,H)`.
pub fn witness_search(
    rho: &DensityMatrix,
    free: &FreeSet,
    epsilon: f64,
    delta_max: f64,
    config: &AscentConfig,
) -> Result<WitnessResult> {
    if !(0.0 <= epsilon && epsilon < delta_max) {
        return Err(Error::InvalidArgument(format!(
            "energy scales must satisfy 0 <= epsilon < delta, got ({epsilon}, {delta_max})"
        )));
    }
    if free.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: free.dim(),
        });
    }
    let d = rho.dim();
    let width = delta_max - epsilon;

    let diffs: Vec<HermitianMatrix> = free
        .extreme_points()
        .iter()
        .map(|eta| HermitianMatrix::new(rho.matrix().data() - eta.matrix().data()))
        .collect::<Result<_>>()?;

    let objective = |h: &HermitianMatrix| -> Result<(f64, usize)> {
        let mut best = f64::INFINITY;
        let mut arg = 0;
        for (j, m) in diffs.iter().enumerate() {
            let v = h.trace_product(m)?;
            if v < best {
                best = v;
                arg = j;
            }
        }
        Ok((best, arg))
    };

    let boxed_candidate = |m: &HermitianMatrix| -> Result<HermitianMatrix> {
        let projector = m.positive_projector()?;
        let mut data = projector.data() * num_complex::Complex64::new(width, 0.0);
        for i in 0..d {
            data[(i, i)] += num_complex::Complex64::new(epsilon, 0.0);
        }
        HermitianMatrix::new(data)
    };

    if diffs.len() == 1 {
        // Exact singleton optimum.
        let h_star = boxed_candidate(&diffs[0])?;
        let gap = h_star.trace_product(&diffs[0])?;
        let found = gap > tol::WITNESS_GAP;
        return Ok(WitnessResult {
            found,
            gap,
            iterations: 0,
            inconclusive: false,
            hamiltonian: if found {
                Some(Hamiltonian::with_bounds(
                    h_star,
                    1.0,
                    Some((epsilon, delta_max)),
                )?)
            } else {
                None
            },
        });
    }

    // Multi-point free set: projected supergradient ascent, step (δ−ε)/√k,
    // best-iterate tracking, eigenvalue clipping into [ε, δ].
    let mean = {
        let mut acc = free.extreme_points()[0].matrix().data().clone();
        for eta in &free.extreme_points()[1..] {
            acc += eta.matrix().data();
        }
        acc /= num_complex::Complex64::new(free.extreme_points().len() as f64, 0.0);
        HermitianMatrix::new(rho.matrix().data() - acc)?
    };
    let mut h = boxed_candidate(&mean)?;
    let (mut best_gap, _) = objective(&h)?;
    let mut best_h = h.clone();

    let window = (config.iterations / 5).max(50);
    let mut best_at_window_start = best_gap;
    let mut improved_recently = true;

    for k in 1..=config.iterations {
        let (value, active) = objective(&h)?;
        if value > best_gap {
            best_gap = value;
            best_h = h.clone();
        }
        let step = width / (k as f64).sqrt();
        let update = h.data() + diffs[active].data() * num_complex::Complex64::new(step, 0.0);
        h = HermitianMatrix::new(update)?.clip_eigenvalues(epsilon, delta_max)?;

        if k % window == 0 {
            improved_recently = best_gap > best_at_window_start + 1e-10 * width;
            best_at_window_start = best_gap;
        }
    }

    // Polish: per-point analytic candidates plus an exact dual solve on the
    // active set (trace-norm minimization over the mixing simplex).
    for m in &diffs {
        let cand = boxed_candidate(m)?;
        let (value, _) = objective(&cand)?;
        if value > best_gap {
            best_gap = value;
            best_h = cand;
        }
    }

    let active_set: Vec<usize> = {
        let (best_value, _) = objective(&best_h)?;
        let slack = 1e-4 * width;
        let mut set: Vec<usize> = (0..diffs.len())
            .filter(|&j| {
                best_h
                    .trace_product(&diffs[j])
                    .map(|v| v <= best_value + slack)
                    .unwrap_or(false)
            })
            .collect();
        if free.extreme_points().len() <= 3 {
            set = (0..diffs.len()).collect();
        }
        set
    };

    let mut dual_solved_full_set = false;
    if active_set.len() >= 2 && active_set.len() <= 3 {
        if let Some(lambda) = dual_mixture_minimizer(rho, free, &active_set)? {
            let mut mix = free.extreme_points()[active_set[0]].matrix().data()
                * num_complex::Complex64::new(lambda[0], 0.0);
            for (pos, &j) in active_set.iter().enumerate().skip(1) {
                mix += free.extreme_points()[j].matrix().data()
                    * num_complex::Complex64::new(lambda[pos], 0.0);
            }
            let m_bar = HermitianMatrix::new(rho.matrix().data() - mix)?;
            let cand = boxed_candidate(&m_bar)?;
            let (value, _) = objective(&cand)?;
            if value > best_gap {
                best_gap = value;
                best_h = cand;
            }
            dual_solved_full_set = active_set.len() == free.extreme_points().len();
        }
    }

    let found = best_gap > tol::WITNESS_GAP;
    let converged = dual_solved_full_set || !improved_recently;
    Ok(WitnessResult {
        found,
        gap: best_gap,
        iterations: config.iterations,
        inconclusive: !found && !converged,
        hamiltonian: if found {
            Some(Hamiltonian::with_bounds(
                best_h,
                1.0,
                Some((epsilon, delta_max)),
            )?)
        } else {
            None
        },
    })
}

/// Minimizes `‖ρ − Σ λ_j η_j‖₁` over the simplex on `active` (2 or 3 points)
/// by nested ternary search; the trace norm is jointly convex in λ.
fn dual_mixture_minimizer(
    rho: &DensityMatrix,
    free: &FreeSet,
    active: &[usize],
) -> Result<Option<Vec<f64>>> {
    let points = free.extreme_points();
    let norm_of = |lambda: &[f64]| -> Result<f64> {
        let mut mix = points[active[0]].matrix().data() * num_complex::Complex64::new(lambda[0], 0.0);
        for (pos, &j) in active.iter().enumerate().skip(1) {
            mix += points[j].matrix().data() * num_complex::Complex64::new(lambda[pos], 0.0);
        }
        HermitianMatrix::new(rho.matrix().data() - mix)?.one_norm()
    };

    match active.len() {
        2 => {
            let f = |x: f64| norm_of(&[x, 1.0 - x]);
            let (x, _) = ternary_min(0.0, 1.0, 90, f)?;
            Ok(Some(vec![x, 1.0 - x]))
        }
        3 => {
            let inner = |x: f64| -> Result<(f64, f64)> {
                let g = |y: f64| norm_of(&[x, y * (1.0 - x), (1.0 - y) * (1.0 - x)]);
                ternary_min(0.0, 1.0, 70, g)
            };
            let mut lo = 0.0;
            let mut hi = 1.0;
            for _ in 0..70 {
                let a = lo + (hi - lo) / 3.0;
                let b = hi - (hi - lo) / 3.0;
                if inner(a)?.1 <= inner(b)?.1 {
                    hi = b;
                } else {
                    lo = a;
                }
            }
            let x = 0.5 * (lo + hi);
            let (y, _) = inner(x)?;
            Ok(Some(vec![x, y * (1.0 - x), (1.0 - y) * (1.0 - x)]))
        }
        _ => Ok(None),
    }
}

fn ternary_min(
    mut lo: f64,
    mut hi: f64,
    iterations: usize,
    f: impl Fn(f64) -> Result<f64>,
) -> Result<(f64, f64)> {
    for _ in 0..iterations {
        let a = lo + (hi - lo) / 3.0;
        let b = hi - (hi - lo) / 3.0;
        if f(a)? <= f(b)? {
            hi = b;
        } else {
            lo = a;
        }
    }
    let x = 0.5 * (lo + hi);
    let fx = f(x)?;
    Ok((x, fx))
}

/// `max_{η ∈ extreme(F)} Δ(η, H)`; valid for the hull by linearity of Δ in
/// the state at fixed H.
pub fn free_set_max_delta(free: &FreeSet, h: &Hamiltonian) -> Result<f64> {
    let mut best = f64::NEG_INFINITY;
    for eta in free.extreme_points() {
        best = best.max(thermo::delta(eta, h)?.delta);
    }
    Ok(best)
}

/// Candidate-generation plan for the resource-measure maximization.
///
/// The candidate set depends only on `(d, ε, δ, plan)` — never on the state —
/// so the measure inherits monotonicity under mixed-unitary channels
/// pointwise from the assisted value. Candidates are Hamiltonian spectra:
/// the assisted value and the free-state baseline both depend on H only
/// through its eigenvalues, so bases never enter.
#[derive(Debug, Clone, Copy)]
pub struct SamplingPlan {
    /// Spectra drawn i.i.d. uniform from `[ε, δ]^d`.
    pub n_random: usize,
    pub seed: u64,
}

impl Default for SamplingPlan {
    fn default() -> Self {
        Self {
            n_random: 256,
            seed: 0,
        }
    }
}

/// Resource-measure evaluation record.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureReport {
    /// `log₂` of the best work ratio, floored at 0.
    pub value: f64,
    pub best_ratio: f64,
    /// Non-increasing spectrum of the best candidate Hamiltonian.
    pub best_spectrum: Vec<f64>,
    pub best_spread: f64,
    /// True when the maximizer hugs the degenerate-spectrum exclusion floor;
    /// the ratio grows like 1/spread there, so the reported value is governed
    /// by the floor rather than by an interior optimum.
    pub at_exclusion_floor: bool,
    pub candidates_evaluated: usize,
    pub candidates_excluded: usize,
}

/// Work-ratio resource measure for mixed-unitary operations with the
/// maximally mixed free set:
/// `M(ρ) = log₂ max_H Δ_MU(ρ,H) / Δ(𝕀/d,H)` over `ε𝕀 ≤ H ≤ δ𝕀`,
/// excluding Hamiltonians within 1e-6 spectral spread of a multiple of the
/// identity (the ratio degenerates to 0/0 there).
///
/// Candidates: the two-level corner spectra, a geometric spread ladder
/// scaling each corner toward its mean down to the exclusion floor, and
/// seeded random spectra.
pub fn resource_measure(
    rho: &DensityMatrix,
    epsilon: f64,
    delta_max: f64,
    plan: &SamplingPlan,
) -> Result<MeasureReport> {
    if !(0.0 <= epsilon && epsilon < delta_max) {
        return Err(Error::InvalidArgument(format!(
            "energy scales must satisfy 0 <= epsilon < delta, got ({epsilon}, {delta_max})"
        )));
    }
    let d = rho.dim();
    let uniform = vec![1.0 / d as f64; d];
    let state = rho.spectrum().values();

    let mut best: Option<(f64, Vec<f64>, f64)> = None;
    let mut evaluated = 0usize;
    let mut excluded = 0usize;

    let mut consider = |energies_desc: &[f64]| {
        let spread = energies_desc[0] - energies_desc[d - 1];
        if spread < tol::MEASURE_SPREAD_FLOOR {
            excluded += 1;
            return;
        }
        let num = thermo::assisted_value_from_spectra(state, energies_desc, 1.0);
        let den = thermo::assisted_value_from_spectra(&uniform, energies_desc, 1.0);
        if den <= 0.0 {
            excluded += 1;
            return;
        }
        let ratio = num / den;
        evaluated += 1;
        if best.as_ref().map_or(true, |(r, _, _)| ratio > *r) {
            best = Some((ratio, energies_desc.to_vec(), spread));
        }
    };

    // Corner spectra and their spread ladder.
    if d >= 2 {
        let floor_lambda = (tol::MEASURE_SPREAD_FLOOR * 1.1) / (delta_max - epsilon);
        for k in 0..=d - 2 {
            let mut corner = vec![epsilon; d];
            for e in corner.iter_mut().take(k + 1) {
                *e = delta_max;
            }
            consider(&corner);
            let mean = corner.iter().sum::<f64>() / d as f64;
            let mut lambda = 0.5f64;
            while lambda > floor_lambda {
                let rung: Vec<f64> = corner.iter().map(|&e| mean + lambda * (e - mean)).collect();
                consider(&rung);
                lambda *= 0.5;
            }
            if floor_lambda < 1.0 {
                let rung: Vec<f64> = corner
                    .iter()
                    .map(|&e| mean + floor_lambda * (e - mean))
                    .collect();
                consider(&rung);
            }
        }
    }

    // Random spectra.
    let mut rng = crate::sampling::rng_for(plan.seed);
    for _ in 0..plan.n_random {
        let mut energies: Vec<f64> = (0..d)
            .map(|_| rand::Rng::random_range(&mut rng, epsilon..=delta_max))
            .collect();
        energies.sort_by(|a, b| b.partial_cmp(a).expect("finite energy"));
        consider(&energies);
    }

    match best {
        None => Err(Error::Inconclusive(
            "every candidate Hamiltonian was degenerate (spectral spread below the exclusion floor)"
                .into(),
        )),
        Some((ratio, spectrum, spread)) => Ok(MeasureReport {
            value: ratio.log2().max(0.0),
            best_ratio: ratio,
            best_spectrum: spectrum,
            best_spread: spread,
            at_exclusion_floor: spread < 10.0 * tol::MEASURE_SPREAD_FLOOR,
            candidates_evaluated: evaluated,
            candidates_excluded: excluded,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{sample_hs_state, sample_mixed_unitary_channel};
    use approx::assert_abs_diff_eq;

    #[test]
    fn free_set_rejects_empty_and_mismatched() {
        assert!(matches!(
            FreeSet::new("empty", vec![]),
            Err(Error::EmptyFreeSet)
        ));
        let pts = vec![
            DensityMatrix::maximally_mixed(2),
            DensityMatrix::maximally_mixed(3),
        ];
        assert!(FreeSet::new("bad", pts).is_err());
    }

    #[test]
    fn singleton_witness_pure_state_example() {
        let rho = DensityMatrix::from_probabilities(&[1.0, 0.0]).unwrap();
        let free = FreeSet::maximally_mixed(2);
        let result = witness_search(&rho, &free, 0.0, 1.0, &AscentConfig::default()).unwrap();
        assert!(result.found);
        assert_abs_diff_eq!(result.gap, 0.5, epsilon = 1e-12);
        let h = result.hamiltonian.unwrap();
        let top = h.energies_descending().values();
        assert_abs_diff_eq!(top[0], 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(top[1], 0.0, epsilon = 1e-9);
    }

    #[test]
    fn singleton_witness_matches_trace_norm_formula() {
        for seed in 0..50u64 {
            let d = 2 + (seed % 3) as usize;
            let rho = sample_hs_state(d, 100 + seed);
            let free = FreeSet::maximally_mixed(d);
            let (eps, dmax) = (0.1, 0.9);
            let result = witness_search(&rho, &free, eps, dmax, &AscentConfig::default()).unwrap();
            let diff = HermitianMatrix::new(
                rho.matrix().data() - DensityMatrix::maximally_mixed(d).matrix().data(),
            )
            .unwrap();
            let expected = (dmax - eps) * diff.one_norm().unwrap() / 2.0;
            assert_abs_diff_eq!(result.gap, expected, epsilon = 1e-9);
            assert!(result.found);
        }
    }

    #[test]
    fn free_state_yields_no_witness() {
        let uniform = DensityMatrix::maximally_mixed(3);
        let free = FreeSet::maximally_mixed(3);
        let result = witness_search(&uniform, &free, 0.0, 1.0, &AscentConfig::default()).unwrap();
        assert!(!result.found);
        assert!(result.gap.abs() <= 1e-9);
        assert!(!result.inconclusive);
        assert!(result.hamiltonian.is_none());
    }

    #[test]
    fn member_of_hull_yields_no_witness_multi_point() {
        let eta_a = DensityMatrix::from_probabilities(&[0.8, 0.2]).unwrap();
        let eta_b = DensityMatrix::from_probabilities(&[0.2, 0.8]).unwrap();
        let rho = DensityMatrix::maximally_mixed(2);
        let free = FreeSet::new("pair", vec![eta_a, eta_b]).unwrap();
        let result = witness_search(&rho, &free, 0.0, 1.0, &AscentConfig::default()).unwrap();
        assert!(!result.found, "gap {}", result.gap);
        assert!(result.gap <= 1e-9);
        assert!(!result.inconclusive);
    }

    #[test]
    fn witness_soundness_via_thermo_recomputation() {
        // Whenever found, re-derive the gap from Δ values, not the linear
        // shortcut.
        for seed in 0..20u64 {
            let d = 3;
            let rho = sample_hs_state(d, 500 + seed);
            let free = FreeSet::new(
                "three",
                vec![
                    sample_hs_state(d, 600 + seed),
                    sample_hs_state(d, 700 + seed),
                    sample_hs_state(d, 800 + seed),
                ],
            )
            .unwrap();
            let result = witness_search(&rho, &free, 0.1, 1.0, &AscentConfig::default()).unwrap();
            if !result.found {
                continue;
            }
            let h = result.hamiltonian.as_ref().unwrap();
            let own = thermo::delta(&rho, h).unwrap().delta;
            let free_best = free_set_max_delta(&free, h).unwrap();
            assert!(own - free_best > 0.0);
            assert_abs_diff_eq!(own - free_best, result.gap, epsilon = 1e-8);
            for &e in h.energies_descending().values() {
                assert!(e >= 0.1 - 1e-9 && e <= 1.0 + 1e-9);
            }
        }
    }

    #[test]
    fn free_set_max_delta_examples() {
        let h = Hamiltonian::from_real_diagonal(&[1.0, 0.0], 1.0).unwrap();
        let excited = DensityMatrix::from_probabilities(&[1.0, 0.0]).unwrap();
        let ground = DensityMatrix::from_probabilities(&[0.0, 1.0]).unwrap();
        let free = FreeSet::new("basis", vec![excited, ground]).unwrap();
        assert_abs_diff_eq!(
            free_set_max_delta(&free, &h).unwrap(),
            0.62011450695827752,
            epsilon = 1e-12
        );

        let degenerate =
            Hamiltonian::new(HermitianMatrix::scaled_identity(2, 0.7), 1.0).unwrap();
        assert!(free_set_max_delta(&free, &degenerate).unwrap().abs() < 1e-12);

        let singleton = FreeSet::maximally_mixed(2);
        let h01 = Hamiltonian::from_real_diagonal(&[0.0, 1.0], 1.0).unwrap();
        assert_abs_diff_eq!(
            free_set_max_delta(&singleton, &h01).unwrap(),
            thermo::delta(&DensityMatrix::maximally_mixed(2), &h01)
                .unwrap()
                .delta,
            epsilon = 1e-15
        );
    }

    #[test]
    fn measure_vanishes_on_maximally_mixed() {
        for d in 2..=4 {
            let report = resource_measure(
                &DensityMatrix::maximally_mixed(d),
                0.1,
                1.0,
                &SamplingPlan::default(),
            )
            .unwrap();
            assert!(report.value < 1e-9, "d={d}: {}", report.value);
        }
    }

    #[test]
    fn measure_positive_on_pure_state_and_beats_grid_oracle() {
        let rho = DensityMatrix::from_probabilities(&[1.0, 0.0]).unwrap();
        let report =
            resource_measure(&rho, 0.1, 1.0, &SamplingPlan::default()).unwrap();
        assert!(report.value > 0.0);

        // Dense-grid oracle over diagonal H = diag(a, b), a,b in [0.1, 1.0]:
        // independent scalar evaluation of the ratio on 100×100 points.
        let mut oracle: f64 = 0.0;
        for ia in 0..100 {
            for ib in 0..100 {
                let a = 0.1 + 0.9 * ia as f64 / 99.0;
                let b = 0.1 + 0.9 * ib as f64 / 99.0;
                let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
                if hi - lo < 1e-6 {
                    continue;
                }
                let ln_z = ((-hi).exp() + (-lo).exp()).ln();
                let num = hi + ln_z - 2.0f64.ln();
                let den = 0.5 * (hi + lo) + ln_z - 2.0f64.ln();
                if den > 0.0 {
                    oracle = oracle.max((num / den).log2());
                }
            }
        }
        assert!(oracle > 0.0);
        assert!(
            report.value >= oracle - 1e-9,
            "measure {} below grid oracle {oracle}",
            report.value
        );
        assert!(report.at_exclusion_floor);
    }

    #[test]
    fn measure_monotone_under_mixed_unitary_channels() {
        let plan = SamplingPlan::default();
        for seed in 0..10u64 {
            let d = 2 + (seed % 2) as usize;
            let rho = sample_hs_state(d, 900 + seed);
            let m_rho = resource_measure(&rho, 0.1, 1.0, &plan).unwrap().value;
            for c in 0..10u64 {
                let channel = sample_mixed_unitary_channel(d, 1000 + 17 * seed + c);
                let out = channel.apply(&rho).unwrap();
                let m_out = resource_measure(&out, 0.1, 1.0, &plan).unwrap().value;
                assert!(
                    m_out <= m_rho + 1e-6,
                    "monotonicity violated: {m_out} > {m_rho} (seed {seed}, channel {c})"
                );
            }
        }
    }

    #[test]
    fn measure_rejects_bad_scales() {
        let rho = DensityMatrix::maximally_mixed(2);
        assert!(resource_measure(&rho, 0.5, 0.5, &SamplingPlan::default()).is_err());
        assert!(resource_measure(&rho, -0.1, 1.0, &SamplingPlan::default()).is_err());
    }

    #[test]
    fn measure_inconclusive_for_scalar_system() {
        // d = 1: every Hamiltonian is a multiple of the identity.
        let rho = DensityMatrix::maximally_mixed(1);
        assert!(matches!(
            resource_measure(&rho, 0.0, 1.0, &SamplingPlan::default()),
            Err(Error::Inconclusive(_))
        ));
    }
}
