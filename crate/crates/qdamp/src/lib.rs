//! Quantumness indicators for a damped two-level system.
//!
//! This crate models a qubit with level splitting `omega` coupled to a
//! thermal reservoir, evolving under Markovian damping in the Heisenberg
//! picture. On top of the dynamics it computes the indicators that
//! distinguish genuinely quantum behaviour from classical stochastic
//! dynamics: temporal correlation functions, Leggett-Garg-type inequality
//! functions, the no-signaling-in-time witness, coherence measures, and
//! the timescales on which each survives damping.
//!
//! # Conventions
//!
//! * Natural units: `hbar = k_B = 1`. Frequencies, rates, temperatures,
//!   and inverse times all share one unit.
//! * The total damping rate is `gamma = gamma0 * (2 n + 1)` with `n` the
//!   thermal occupation at the system frequency; `gamma0` is the
//!   zero-temperature (spontaneous) rate.
//! * Superoperators are real 4x4 matrices over either the Pauli basis
//!   `(sigma_x, sigma_y, sigma_z, I)` or the projector basis
//!   `(Pi_+, Pi_-, sigma_y, sigma_z)` with `Pi_pm = (I pm sigma_x)/2`.
//! * Everything numerical is generic over the floating-point scalar via
//!   the [`Scalar`] trait (`f32`, `f64`); concrete aliases like
//!   [`SystemParams64`] fix the common choice at the crate root.
//!
//! # Example
//!
//! ```
//! use qdamp::{witness_analytic, SystemParams64};
//!
//! // splitting 1, spontaneous rate 0.04, zero-temperature reservoir
//! let params = SystemParams64::new(1.0, 0.04, 0.0)?;
//! // no-signaling witness half a period after preparation
//! let w = witness_analytic(&params, std::f64::consts::PI);
//! assert!((w - 0.4695506837121463).abs() < 1e-15);
//! # Ok::<(), qdamp::Error>(())
//! ```
//!
//! The `qdamp` binary exposes the same machinery as CSV-emitting
//! subcommands (`series`, `tsweep`) plus a `check` subcommand running the
//! cross-validation battery in [`checks`].

// Validation guards are written as negated comparisons (`!(x > 0)`) so NaN
// always lands on the rejecting branch; the `partial_cmp` spelling clippy
// prefers would bury that property.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod mat4;
mod scalar;

pub mod bloch;
pub mod checks;
pub mod correlations;
pub mod error;
pub mod indicators;
pub mod liouvillian;
pub mod operator;
pub mod params;
pub mod sweep;

pub use bloch::{maximally_coherent_state, BlochState};
pub use checks::CheckOutcome;
pub use correlations::{
    correlation_analytic, correlation_regression, CorrelationKind, CorrelationSeries,
};
pub use error::{Error, Result};
pub use indicators::{
    disturbance_norm, disturbance_norm_normed, k3, k_pm, quantum_time, witness_all,
    witness_analytic, witness_propagator, witness_sigma_y, LgSign, QuantumTime, WitnessResult,
};
pub use liouvillian::{
    build_generator_pauli, build_generator_projector, evolve_expectations, propagator_analytic,
    propagator_analytic_pauli, propagator_numeric, SuperOpKind, SuperOpMatrix,
};
pub use operator::{OperatorBasis, OperatorVector};
pub use params::{thermal_occupation, SystemParams, Timescale};
pub use scalar::Scalar;
pub use sweep::{
    run_temperature_sweep, run_time_series, sample_indicator, Grid, IndicatorSeries, Quantity,
    SweepMode, SweepSpec,
};

/// Double-precision aliases — the workhorse instantiation.
pub type SystemParams64 = SystemParams<f64>;
pub type Timescale64 = Timescale<f64>;
pub type BlochState64 = BlochState<f64>;
pub type OperatorVector64 = OperatorVector<f64>;
pub type SuperOpMatrix64 = SuperOpMatrix<f64>;
pub type CorrelationSeries64 = CorrelationSeries<f64>;
pub type QuantumTime64 = QuantumTime<f64>;
pub type WitnessResult64 = WitnessResult<f64>;
pub type IndicatorSeries64 = IndicatorSeries<f64>;
pub type SweepSpec64 = SweepSpec<f64>;
pub type Grid64 = Grid<f64>;

/// Single-precision aliases, for quick scans where 7 digits suffice.
pub type SystemParams32 = SystemParams<f32>;
pub type Timescale32 = Timescale<f32>;
pub type BlochState32 = BlochState<f32>;
pub type OperatorVector32 = OperatorVector<f32>;
pub type SuperOpMatrix32 = SuperOpMatrix<f32>;
pub type CorrelationSeries32 = CorrelationSeries<f32>;
pub type QuantumTime32 = QuantumTime<f32>;
pub type WitnessResult32 = WitnessResult<f32>;
pub type IndicatorSeries32 = IndicatorSeries<f32>;
pub type SweepSpec32 = SweepSpec<f32>;
pub type Grid32 = Grid<f32>;
