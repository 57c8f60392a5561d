//! System parameters and the thermal quantities derived from them.
//!
//! Conventions: ħ = k_B = 1, so frequencies, decay rates, and temperatures
//! all share one unit and times carry its inverse. The qubit precesses at
//! the Larmor frequency ω and couples to a thermal reservoir whose mean
//! occupation at that frequency is n̄ = 1/(e^{ω/T} − 1); spontaneous decay
//! at rate γ0 is then dressed to the total damping rate γ = γ0 (2 n̄ + 1).

use crate::error::{Error, Result};
use crate::scalar::{lit, to64, Scalar};

/// A timescale that may be infinite (an undamped system never decays).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Timescale<T> {
    Finite(T),
    Unbounded,
}

impl<T: Scalar> Timescale<T> {
    /// The finite value, if there is one.
    pub fn finite(&self) -> Option<T> {
        match *self {
            Timescale::Finite(t) => Some(t),
            Timescale::Unbounded => None,
        }
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, Timescale::Unbounded)
    }

    /// Collapse to a float, mapping `Unbounded` to positive infinity.
    pub fn as_float(&self) -> T {
        match *self {
            Timescale::Finite(t) => t,
            Timescale::Unbounded => T::infinity(),
        }
    }
}

impl<T: Scalar> std::fmt::Display for Timescale<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Timescale::Finite(t) => write!(f, "{t}"),
            Timescale::Unbounded => write!(f, "inf"),
        }
    }
}

/// Mean thermal occupation n̄ = 1/(e^{ω/T} − 1) of the reservoir mode at
/// frequency `omega`.
///
/// `temperature = 0` takes an exact branch and returns 0 (no underflow
/// round-off); large `omega/temperature` decays smoothly to 0 through
/// `exp_m1`, and large temperatures approach the classical ~T/ω growth.
pub fn thermal_occupation<T: Scalar>(omega: T, temperature: T) -> Result<T> {
    if !(omega > T::zero()) {
        return Err(Error::NonPositiveFrequency(to64(omega)));
    }
    if temperature < T::zero() {
        return Err(Error::NegativeTemperature(to64(temperature)));
    }
    if temperature == T::zero() {
        return Ok(T::zero());
    }
    Ok(T::one() / (omega / temperature).exp_m1())
}

/// Validated physical parameters of the damped qubit, with the derived
/// thermal quantities cached at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams<T> {
    omega: T,
    gamma0: T,
    temperature: T,
    n_thermal: T,
    gamma: T,
}

impl<T: Scalar> SystemParams<T> {
    /// Validate `(omega, gamma0, temperature)` and derive n̄ and γ.
    pub fn new(omega: T, gamma0: T, temperature: T) -> Result<Self> {
        let n_thermal = thermal_occupation(omega, temperature)?;
        if !(gamma0 >= T::zero()) {
            return Err(Error::NegativeDecayRate(to64(gamma0)));
        }
        let gamma = gamma0 * (lit::<T>(2.0) * n_thermal + T::one());
        Ok(Self {
            omega,
            gamma0,
            temperature,
            n_thermal,
            gamma,
        })
    }

    /// Larmor frequency ω.
    pub fn omega(&self) -> T {
        self.omega
    }

    /// Spontaneous (zero-temperature) decay rate γ0.
    pub fn gamma0(&self) -> T {
        self.gamma0
    }

    /// Reservoir temperature.
    pub fn temperature(&self) -> T {
        self.temperature
    }

    /// Mean reservoir occupation n̄ at the Larmor frequency.
    pub fn n_thermal(&self) -> T {
        self.n_thermal
    }

    /// Total damping rate γ = γ0 (2 n̄ + 1).
    pub fn gamma(&self) -> T {
        self.gamma
    }

    /// 1/e decay time of the transverse components, t_c = 2/γ.
    pub fn coherence_time(&self) -> Timescale<T> {
        if self.gamma == T::zero() {
            Timescale::Unbounded
        } else {
            Timescale::Finite(lit::<T>(2.0) / self.gamma)
        }
    }

    /// Coherence half-life τ_c = 2 ln 2 / γ, the time at which the
    /// transverse envelope has dropped to one half.
    pub fn coherence_halflife(&self) -> Timescale<T> {
        if self.gamma == T::zero() {
            Timescale::Unbounded
        } else {
            Timescale::Finite(lit::<T>(2.0) * T::LN_2() / self.gamma)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn occupation_is_exactly_zero_at_zero_temperature() {
        assert_eq!(thermal_occupation(1.0_f64, 0.0).unwrap(), 0.0);
        assert_eq!(thermal_occupation(20.0_f64, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn occupation_matches_direct_evaluation() {
        // 1/(e - 1)
        let n = thermal_occupation(1.0_f64, 1.0).unwrap();
        assert!((n - 0.581_976_706_869_326_4).abs() < 1e-15);
    }

    #[test]
    fn occupation_is_one_when_frequency_equals_temperature_times_ln2() {
        // e^{ln 2} - 1 = 1
        let n = thermal_occupation(std::f64::consts::LN_2, 1.0).unwrap();
        assert!((n - 1.0).abs() < 1e-15);
    }

    #[test]
    fn occupation_underflows_cleanly_for_cold_reservoirs() {
        let n = thermal_occupation(1.0_f64, 1e-4).unwrap();
        assert!((0.0..1e-300).contains(&n));
    }

    #[test]
    fn occupation_rejects_bad_domains() {
        assert!(matches!(
            thermal_occupation(0.0_f64, 1.0),
            Err(Error::NonPositiveFrequency(_))
        ));
        assert!(matches!(
            thermal_occupation(-1.0_f64, 1.0),
            Err(Error::NonPositiveFrequency(_))
        ));
        assert!(matches!(
            thermal_occupation(1.0_f64, -0.5),
            Err(Error::NegativeTemperature(_))
        ));
    }

    #[test]
    fn zero_temperature_params_keep_the_bare_rate() {
        let p = SystemParams::new(1.0_f64, 0.04, 0.0).unwrap();
        assert_eq!(p.gamma(), 0.04);
        assert_eq!(p.n_thermal(), 0.0);
        let tc = p.coherence_time().finite().unwrap();
        assert!((tc - 50.0).abs() < 1e-12);
        let th = p.coherence_halflife().finite().unwrap();
        assert!((th - 34.657_359_027_997_265).abs() < 1e-12);
    }

    #[test]
    fn unit_occupation_triples_the_rate() {
        let p = SystemParams::new(std::f64::consts::LN_2, 0.01, 1.0).unwrap();
        assert!((p.gamma() - 0.03).abs() < 1e-15);
    }

    #[test]
    fn undamped_timescales_are_unbounded() {
        let p = SystemParams::new(1.0_f64, 0.0, 5.0).unwrap();
        assert_eq!(p.gamma(), 0.0);
        assert!(p.coherence_time().is_unbounded());
        assert!(p.coherence_halflife().is_unbounded());
        assert_eq!(p.coherence_halflife().as_float(), f64::INFINITY);
    }

    #[test]
    fn halflife_is_ln2_times_coherence_time() {
        let p = SystemParams::new(2.0_f64, 0.3, 1.7).unwrap();
        let tc = p.coherence_time().finite().unwrap();
        let th = p.coherence_halflife().finite().unwrap();
        assert!((th / tc - std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn params_reject_negative_decay_rate() {
        assert!(matches!(
            SystemParams::new(1.0_f64, -0.1, 0.0),
            Err(Error::NegativeDecayRate(_))
        ));
    }

    #[test]
    fn timescale_displays_the_sentinel() {
        assert_eq!(Timescale::<f64>::Unbounded.to_string(), "inf");
        assert_eq!(Timescale::Finite(2.0_f64).to_string(), "2");
    }

    proptest! {
        #[test]
        fn gamma_never_drops_below_the_bare_rate(
            omega in 0.05_f64..40.0,
            gamma0 in 0.0_f64..1.0,
            t in 0.0_f64..80.0,
        ) {
            let p = SystemParams::new(omega, gamma0, t).unwrap();
            prop_assert!(p.gamma() >= gamma0);
        }

        #[test]
        fn gamma_grows_with_temperature(
            omega in 0.05_f64..40.0,
            gamma0 in 1e-6_f64..1.0,
            t1 in 0.0_f64..80.0,
            dt in 0.0_f64..40.0,
        ) {
            let cold = SystemParams::new(omega, gamma0, t1).unwrap();
            let warm = SystemParams::new(omega, gamma0, t1 + dt).unwrap();
            prop_assert!(warm.gamma() >= cold.gamma() - 1e-12 * cold.gamma());
        }
    }
}
