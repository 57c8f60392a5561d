//! Quantumness indicators built on the σx autocorrelation: temporal
//! (Leggett-Garg-type) inequality functions and their violation lifetimes,
//! the no-signaling-in-time witness in three independent formulations, and
//! the Hilbert–Schmidt incompatibility of two observables.
//!
//! All indicators refer to dichotomous σx measurements. For three
//! measurements at times 0, τ/2, τ the two inequality functions are
//!
//! ```text
//!   K−(τ) = −C(τ) + 2 C(τ/2)      (≤ 1 for any classical stochastic process)
//!   K+(τ) = −C(τ) − 2 C(τ/2)
//! ```
//!
//! and a value above 1 certifies genuinely quantum temporal correlations.
//! The witness instead compares the σx distribution at τ with and without an
//! intermediate (non-selective) measurement at τ/2.

use crate::bloch::maximally_coherent_state;
use crate::correlations::correlation_analytic;
use crate::error::{Error, Result};
use crate::liouvillian::{evolve_expectations, propagator_analytic};
use crate::operator::{OperatorBasis, OperatorVector};
use crate::params::{SystemParams, Timescale};
use crate::scalar::{lit, Scalar};

/// Which of the two inequality-function branches is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LgSign {
    Plus,
    Minus,
}

/// Violations are accepted at K ≥ 1 − this absolute slack, so the exact
/// K−(0) = 1 point is not lost to rounding.
const LEVEL_TOLERANCE: f64 = 1e-12;

/// The inequality function K±(τ) for equally spaced σx measurements.
pub fn k_pm<T: Scalar>(params: &SystemParams<T>, tau: T, sign: LgSign) -> T {
    debug_assert!(tau >= T::zero(), "measurement separation must be non-negative");
    let half = lit::<T>(0.5);
    let two = lit::<T>(2.0);
    let c_full = correlation_analytic(params, tau);
    let c_half = correlation_analytic(params, tau * half);
    match sign {
        LgSign::Plus => -c_full - two * c_half,
        LgSign::Minus => -c_full + two * c_half,
    }
}

/// The three-measurement inequality function K3(τ); identical to the minus
/// branch of [`k_pm`] (same code path, bit-for-bit).
pub fn k3<T: Scalar>(params: &SystemParams<T>, tau: T) -> T {
    k_pm(params, tau, LgSign::Minus)
}

/// The largest measurement separation still violating one inequality
/// branch, with the search evidence that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumTime<T> {
    pub sign: LgSign,
    /// Last τ with K ≥ 1 (up to the level tolerance); `Unbounded` for an
    /// undamped system, where violations recur forever.
    pub value: Timescale<T>,
    /// Final bisection bracket (lo, hi) with K above level at `lo` and
    /// below at `hi`; `None` when no bisection ran.
    pub bracket: Option<(T, T)>,
    /// Set when the branch never reaches level 1 at any τ ≥ 0 (possible for
    /// the plus branch, which starts at K+(0) = −3). The value is then 0 so
    /// sweeps can still plot it.
    pub no_violation: bool,
}

/// Find the largest τ with K±(τ) ≥ 1 (within the level tolerance).
///
/// Strategy: γ = 0 short-circuits to `Unbounded`. Otherwise both branches
/// obey |K±| ≤ e^{−γτ/2} + 2e^{−γτ/4} ≤ 3e^{−γτ/4}, so no violation can
/// survive past τ_max = (4/γ) ln 3. The interval [0, τ_max] is scanned from
/// the top down at step π/(200 ω) — at least 100 samples per half-period of
/// the fastest oscillation in K — and the first sample at level is refined
/// by bisection on the level condition until the bracket collapses to
/// adjacent floats. Cost scales like ω/γ.
pub fn quantum_time<T: Scalar>(params: &SystemParams<T>, sign: LgSign) -> QuantumTime<T> {
    if params.gamma() == T::zero() {
        return QuantumTime {
            sign,
            value: Timescale::Unbounded,
            bracket: None,
            no_violation: false,
        };
    }
    let level = T::one() - lit::<T>(LEVEL_TOLERANCE);
    let at_level = |tau: T| k_pm(params, tau, sign) >= level;

    let tau_max = lit::<T>(4.0) * lit::<T>(3.0).ln() / params.gamma();
    let step = T::PI() / (lit::<T>(200.0) * params.omega());
    let grid_point = |k: usize| T::from_usize(k).expect("grid index fits the scalar") * step;
    let n = (tau_max / step)
        .ceil()
        .to_usize()
        .expect("scan grid fits usize");

    let mut hit = None;
    for k in (0..=n).rev() {
        if at_level(grid_point(k)) {
            hit = Some(k);
            break;
        }
    }
    let Some(k_star) = hit else {
        return QuantumTime {
            sign,
            value: Timescale::Finite(T::zero()),
            bracket: None,
            no_violation: true,
        };
    };

    let mut lo = grid_point(k_star);
    let mut hi = grid_point(k_star + 1);
    // The decay envelope rules out level crossings above τ_max, but if the
    // top grid point itself is at level, walk outward until it is not.
    while at_level(hi) {
        lo = hi;
        hi += step;
    }
    loop {
        let mid = (lo + hi) * lit::<T>(0.5);
        if !(mid > lo && mid < hi) {
            break;
        }
        if at_level(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    QuantumTime {
        sign,
        value: Timescale::Finite(lo),
        bracket: Some((lo, hi)),
        no_violation: false,
    }
}

/// Closed-form no-signaling witness W(τ) = (1/2) e^{−γτ/2} sin²(ωτ/2).
pub fn witness_analytic<T: Scalar>(params: &SystemParams<T>, tau: T) -> T {
    debug_assert!(tau >= T::zero(), "witness time must be non-negative");
    let half = lit::<T>(0.5);
    let s = (params.omega() * tau * half).sin();
    half * (-(params.gamma() * half) * tau).exp() * s * s
}

/// Witness from measurement statistics: |p₊(τ) − p'₊(τ)|, where p₊ is the
/// probability of the +1 outcome of σx starting from the +1 eigenstate, and
/// p'₊ chains the two half-interval transition blocks through a
/// non-selective σx measurement at τ/2.
pub fn witness_propagator<T: Scalar>(params: &SystemParams<T>, tau: T) -> T {
    debug_assert!(tau >= T::zero(), "witness time must be non-negative");
    let half = lit::<T>(0.5);
    // Uninterrupted: in the +1 eigenstate only the Π+ expectation is
    // non-zero, so p₊(τ) is the (Π+, Π+) propagator entry.
    let p_direct = propagator_analytic(params, tau).entry(0, 0);
    // Interrupted: outcome probabilities at τ/2 are the first column of the
    // half-time transition block; each outcome then propagates through the
    // same block for the second half interval.
    let m = propagator_analytic(params, tau * half);
    let p_chained = m.entry(0, 0) * m.entry(0, 0) + m.entry(0, 1) * m.entry(1, 0);
    (p_direct - p_chained).abs()
}

/// Witness via the transverse expectation: W(τ) = (1/2) ⟨σy(τ/2)⟩² with the
/// system started in the +1 eigenstate of σx.
pub fn witness_sigma_y<T: Scalar>(params: &SystemParams<T>, tau: T) -> T {
    debug_assert!(tau >= T::zero(), "witness time must be non-negative");
    let half = lit::<T>(0.5);
    let y = evolve_expectations(params, &maximally_coherent_state(), tau * half).y();
    half * y * y
}

/// The witness evaluated through all three formulations at one τ, for
/// cross-validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessResult<T> {
    pub tau: T,
    pub w_analytic: T,
    pub w_propagator: T,
    pub w_sigma_y: T,
}

impl<T: Scalar> WitnessResult<T> {
    /// Largest pairwise discrepancy between the three formulations.
    pub fn spread(&self) -> T {
        let a = (self.w_analytic - self.w_propagator).abs();
        let b = (self.w_analytic - self.w_sigma_y).abs();
        let c = (self.w_propagator - self.w_sigma_y).abs();
        a.max(b).max(c)
    }

    pub fn formulations_agree(&self, tol: T) -> bool {
        self.spread() <= tol
    }

    /// The witness value (closed form, which the others must match).
    pub fn value(&self) -> T {
        self.w_analytic
    }
}

/// Evaluate all three witness formulations at `tau`.
pub fn witness_all<T: Scalar>(params: &SystemParams<T>, tau: T) -> WitnessResult<T> {
    WitnessResult {
        tau,
        w_analytic: witness_analytic(params, tau),
        w_propagator: witness_propagator(params, tau),
        w_sigma_y: witness_sigma_y(params, tau),
    }
}

/// Squared Hilbert–Schmidt norm of the commutator, ‖[A,B]‖²₂ = 8 |a⃗ × b⃗|²
/// for Pauli-basis coefficient vectors (identity components commute away).
///
/// [A,B] = 2i Σ_k (a⃗ × b⃗)_k σ_k, and each σ_k carries trace weight 2, so
/// the norm is 4·|a⃗ × b⃗|²·2.
pub fn disturbance_norm<T: Scalar>(
    a: &OperatorVector<T>,
    b: &OperatorVector<T>,
) -> Result<T> {
    if a.basis() != b.basis() {
        return Err(Error::BasisMismatch(a.basis(), b.basis()));
    }
    if a.basis() != OperatorBasis::Pauli {
        return Err(Error::WrongBasis {
            expected: OperatorBasis::Pauli,
            found: a.basis(),
        });
    }
    let ca = a.coeffs();
    let cb = b.coeffs();
    let cx = ca[1] * cb[2] - ca[2] * cb[1];
    let cy = ca[2] * cb[0] - ca[0] * cb[2];
    let cz = ca[0] * cb[1] - ca[1] * cb[0];
    Ok(lit::<T>(8.0) * (cx * cx + cy * cy + cz * cz))
}

/// [`disturbance_norm`] of the unit-norm rescalings Â = A/‖A‖₂,
/// B̂ = B/‖B‖₂, computed as an exact division by the squared norms rather
/// than by pre-scaling the coefficients — so maximally incompatible pairs
/// like σx, σy give exactly 2 instead of 2 ± a few ulp.
pub fn disturbance_norm_normed<T: Scalar>(
    a: &OperatorVector<T>,
    b: &OperatorVector<T>,
) -> Result<T> {
    let raw = disturbance_norm(a, b)?;
    let na = a.hs_norm_sq();
    let nb = b.hs_norm_sq();
    if na == T::zero() || nb == T::zero() {
        return Err(Error::ZeroOperator);
    }
    Ok(raw / (na * nb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn params(omega: f64, gamma0: f64, temperature: f64) -> SystemParams<f64> {
        SystemParams::new(omega, gamma0, temperature).unwrap()
    }

    #[test]
    fn zero_separation_values_are_exact() {
        let p = params(1.0, 0.04, 0.3);
        assert_eq!(k3(&p, 0.0), 1.0);
        assert_eq!(k_pm(&p, 0.0, LgSign::Minus), 1.0);
        assert_eq!(k_pm(&p, 0.0, LgSign::Plus), -3.0);
    }

    #[test]
    fn undamped_branch_values_at_special_angles() {
        let p = params(1.0, 0.0, 0.0);
        assert!((k3(&p, 2.0 * PI / 3.0) - 1.5).abs() < 1e-14);
        assert!((k_pm(&p, 2.0 * PI / 3.0, LgSign::Plus) + 0.5).abs() < 1e-14);
        assert!((k_pm(&p, 4.0 * PI / 3.0, LgSign::Plus) - 1.5).abs() < 1e-14);
        assert!((k3(&p, 2.0 * PI) + 3.0).abs() < 1e-14);
    }

    #[test]
    fn branches_never_violate_simultaneously() {
        // K+ + K− = −2C(τ) ≤ 2, so both above 1 is impossible; verify on a
        // dense grid covering one full period of the slower oscillation.
        let p = params(1.0, 0.0, 0.0);
        for i in 0..=4000 {
            let tau = 4.0 * PI * i as f64 / 4000.0;
            let both = k_pm(&p, tau, LgSign::Plus) > 1.0 && k_pm(&p, tau, LgSign::Minus) > 1.0;
            assert!(!both, "simultaneous violation at tau = {tau}");
        }
    }

    #[test]
    fn undamped_quantum_time_is_unbounded() {
        let p = params(1.0, 0.0, 5.0);
        for sign in [LgSign::Plus, LgSign::Minus] {
            let qt = quantum_time(&p, sign);
            assert!(qt.value.is_unbounded());
            assert!(!qt.no_violation);
            assert!(qt.bracket.is_none());
        }
    }

    #[test]
    fn quantum_time_matches_a_brute_force_scan() {
        let p = params(20.0, 0.01, 0.0);
        let tau_max = 4.0 * 3.0_f64.ln() / p.gamma();
        let n = 1_000_000;
        for sign in [LgSign::Plus, LgSign::Minus] {
            let qt = quantum_time(&p, sign);
            let refined = qt.value.finite().unwrap();
            let brute = (0..=n)
                .rev()
                .map(|k| tau_max * k as f64 / n as f64)
                .find(|&tau| k_pm(&p, tau, sign) >= 1.0 - 1e-12)
                .unwrap();
            assert!(
                (refined - brute).abs() <= tau_max / n as f64,
                "{sign:?}: refined {refined} vs brute {brute}"
            );
        }
    }

    #[test]
    fn quantum_time_sits_on_the_level_crossing() {
        let p = params(20.0, 0.01, 0.0);
        for sign in [LgSign::Plus, LgSign::Minus] {
            let qt = quantum_time(&p, sign);
            let tau = qt.value.finite().unwrap();
            assert!((k_pm(&p, tau, sign) - 1.0).abs() < 1e-10);
            let (lo, hi) = qt.bracket.unwrap();
            assert!(lo <= tau && tau <= hi);
            assert!(hi - lo < 1e-9);
            // nothing at level beyond the reported time
            for i in 1..=20_000 {
                let probe = tau + (tau_max_for(&p) - tau) * i as f64 / 20_000.0;
                assert!(k_pm(&p, probe, sign) < 1.0, "level reached at {probe}");
            }
        }
    }

    fn tau_max_for(p: &SystemParams<f64>) -> f64 {
        4.0 * 3.0_f64.ln() / p.gamma()
    }

    #[test]
    fn overdamped_plus_branch_reports_no_violation() {
        let p = params(1.0, 3.0, 0.0);
        let qt = quantum_time(&p, LgSign::Plus);
        assert!(qt.no_violation);
        assert_eq!(qt.value.finite().unwrap(), 0.0);
        assert!(qt.bracket.is_none());
        // The minus branch starts exactly at level 1, so its violation set
        // is non-empty but shrinks to the origin's tolerance neighborhood.
        let qt = quantum_time(&p, LgSign::Minus);
        assert!(!qt.no_violation);
        let tau = qt.value.finite().unwrap();
        assert!(tau < 1e-4, "expected a near-origin crossing, got {tau}");
        assert!((k_pm(&p, tau, LgSign::Minus) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn quantum_times_never_exceed_the_coherence_halflife() {
        for temperature in [0.0, 1.0, 10.0] {
            let p = params(20.0, 0.01, temperature);
            let halflife = p.coherence_halflife().finite().unwrap();
            for sign in [LgSign::Plus, LgSign::Minus] {
                let tau = quantum_time(&p, sign).value.finite().unwrap();
                assert!(tau <= halflife + 1e-9, "T={temperature}, {sign:?}");
            }
        }
    }

    #[test]
    fn minus_quantum_time_shrinks_with_temperature() {
        let taus: Vec<f64> = [1.0, 5.0, 10.0, 20.0, 40.0]
            .iter()
            .map(|&t| {
                quantum_time(&params(20.0, 0.01, t), LgSign::Minus)
                    .value
                    .finite()
                    .unwrap()
            })
            .collect();
        for w in taus.windows(2) {
            assert!(w[1] <= w[0] + 1e-9, "not non-increasing: {taus:?}");
        }
    }

    #[test]
    fn witness_vanishes_at_zero_time() {
        let p = params(1.0, 0.04, 0.7);
        assert_eq!(witness_analytic(&p, 0.0), 0.0);
        assert_eq!(witness_propagator(&p, 0.0), 0.0);
        assert_eq!(witness_sigma_y(&p, 0.0), 0.0);
    }

    #[test]
    fn witness_half_period_value_matches_direct_evaluation() {
        // (1/2) e^{−0.02π} at γ = 0.04, ω = 1, τ = π
        let p = params(1.0, 0.04, 0.0);
        let expected = 0.469_550_683_712_146_3;
        assert!((witness_analytic(&p, PI) - expected).abs() < 1e-15);
        assert!((witness_propagator(&p, PI) - expected).abs() < 1e-15);
        assert!((witness_sigma_y(&p, PI) - expected).abs() < 1e-15);
    }

    #[test]
    fn undamped_witness_peaks_at_one_half() {
        let p = params(1.0, 0.0, 0.0);
        assert!((witness_analytic(&p, PI) - 0.5).abs() < 1e-15);
        assert!((witness_propagator(&p, PI) - 0.5).abs() < 1e-15);
        assert!((witness_sigma_y(&p, PI) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn the_three_formulations_agree_everywhere_sampled() {
        let mut worst = 0.0_f64;
        for &omega in &[0.5, 1.0, 2.0, 20.0] {
            for &gamma0 in &[0.0, 0.01, 0.04, 1.0] {
                for &temperature in &[0.0, 2.0] {
                    let p = params(omega, gamma0, temperature);
                    for i in 0..25 {
                        let tau = 4.0 * PI / omega * i as f64 / 24.0;
                        worst = worst.max(witness_all(&p, tau).spread());
                    }
                }
            }
        }
        assert!(worst < 1e-10, "worst spread {worst}");
    }

    #[test]
    fn witness_stays_below_half_the_coherence_envelope() {
        let p = params(1.0, 0.04, 0.0);
        for i in 0..=2000 {
            let tau = 8.0 * PI * i as f64 / 2000.0;
            let bound = 0.5 * (-0.02 * tau).exp();
            assert!(witness_analytic(&p, tau) <= bound + 1e-12);
        }
        // the bound is tight at odd half-period multiples
        for k in [1, 3, 5] {
            let tau = k as f64 * PI;
            let gap = 0.5 * (-0.02 * tau).exp() - witness_analytic(&p, tau);
            assert!(gap.abs() < 1e-12);
        }
    }

    #[test]
    fn witness_maxima_touch_the_classical_boundary() {
        // Undamped: wherever the witness peaks, one inequality branch sits
        // exactly at its classical level.
        let p = params(1.0, 0.0, 0.0);
        for k in [1, 3, 5] {
            let tau = k as f64 * PI;
            assert!((witness_analytic(&p, tau) - 0.5).abs() < 1e-12);
            let dist = (k_pm(&p, tau, LgSign::Plus) - 1.0)
                .abs()
                .min((k_pm(&p, tau, LgSign::Minus) - 1.0).abs());
            assert!(dist <= 1e-9, "tau = {tau}: distance {dist}");
        }
    }

    #[test]
    fn witness_result_reports_its_spread() {
        let r = WitnessResult {
            tau: 1.0,
            w_analytic: 0.25_f64,
            w_propagator: 0.25 + 3e-12,
            w_sigma_y: 0.25 - 1e-12,
        };
        assert!((r.spread() - 4e-12).abs() < 1e-15);
        assert!(r.formulations_agree(1e-10));
        assert!(!r.formulations_agree(1e-12));
        assert_eq!(r.value(), 0.25);
    }

    #[test]
    fn self_commutators_vanish_exactly() {
        let x = OperatorVector::<f64>::sigma_x();
        assert_eq!(disturbance_norm(&x, &x).unwrap(), 0.0);
        let v = OperatorVector::new(OperatorBasis::Pauli, [0.3_f64, -1.2, 0.5, 2.0]);
        assert_eq!(disturbance_norm(&v, &v).unwrap(), 0.0);
    }

    #[test]
    fn orthogonal_pauli_pairs_are_maximally_incompatible() {
        let x = OperatorVector::<f64>::sigma_x();
        let y = OperatorVector::<f64>::sigma_y();
        let z = OperatorVector::<f64>::sigma_z();
        assert_eq!(disturbance_norm(&x, &y).unwrap(), 8.0);
        assert_eq!(disturbance_norm_normed(&x, &y).unwrap(), 2.0);
        assert_eq!(disturbance_norm_normed(&x, &z).unwrap(), 2.0);
        assert_eq!(disturbance_norm_normed(&y, &z).unwrap(), 2.0);
    }

    #[test]
    fn prescaled_unit_norm_pair_matches_the_normed_value() {
        let s = 0.5_f64.sqrt();
        let a = OperatorVector::<f64>::sigma_x().scaled(s);
        let b = OperatorVector::<f64>::sigma_y().scaled(s);
        assert!((disturbance_norm(&a, &b).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn identity_components_do_not_disturb() {
        let x = OperatorVector::<f64>::sigma_x();
        let y = OperatorVector::<f64>::sigma_y();
        let shifted = OperatorVector::new(OperatorBasis::Pauli, [1.0_f64, 0.0, 0.0, 0.3]);
        assert_eq!(
            disturbance_norm(&shifted, &y).unwrap(),
            disturbance_norm(&x, &y).unwrap()
        );
    }

    #[test]
    fn disturbance_scales_with_both_norms() {
        let a = OperatorVector::<f64>::sigma_x().scaled(2.0);
        let b = OperatorVector::<f64>::sigma_y().scaled(3.0);
        assert_eq!(disturbance_norm(&a, &b).unwrap(), 36.0 * 8.0);
        assert_eq!(disturbance_norm_normed(&a, &b).unwrap(), 2.0);
    }

    #[test]
    fn disturbance_rejects_bad_inputs() {
        let x = OperatorVector::<f64>::sigma_x();
        let proj = OperatorVector::new(OperatorBasis::Projector, [1.0_f64, 0.0, 0.0, 0.0]);
        assert!(matches!(
            disturbance_norm(&x, &proj),
            Err(Error::BasisMismatch(_, _))
        ));
        assert!(matches!(
            disturbance_norm(&proj, &proj),
            Err(Error::WrongBasis { .. })
        ));
        let zero = OperatorVector::new(OperatorBasis::Pauli, [0.0_f64; 4]);
        assert!(matches!(
            disturbance_norm_normed(&x, &zero),
            Err(Error::ZeroOperator)
        ));
    }

    proptest! {
        #[test]
        fn minus_branch_is_bit_identical_to_k3(
            omega in 0.1_f64..10.0,
            gamma0 in 0.0_f64..1.0,
            temperature in 0.0_f64..5.0,
            tau in 0.0_f64..50.0,
        ) {
            let p = params(omega, gamma0, temperature);
            prop_assert_eq!(k_pm(&p, tau, LgSign::Minus), k3(&p, tau));
        }

        #[test]
        fn witness_is_always_in_range(
            omega in 0.1_f64..10.0,
            gamma0 in 0.0_f64..1.0,
            temperature in 0.0_f64..5.0,
            tau in 0.0_f64..50.0,
        ) {
            let p = params(omega, gamma0, temperature);
            let w = witness_analytic(&p, tau);
            prop_assert!((0.0..=0.5).contains(&w));
        }
    }
}
