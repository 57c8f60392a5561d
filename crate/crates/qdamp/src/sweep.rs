//! Parameter sweeps and deterministic CSV emission.
//!
//! Two sweep modes exist: a time series sampling the τ-dependent indicators
//! on a fixed-parameter system, and a temperature sweep tracking the
//! characteristic times as the reservoir heats up. Both emit CSV with a
//! header row, `.` decimal points, LF line endings, and 13 significant
//! digits per value; unbounded timescales are rendered as the literal token
//! `inf`. Identical specs produce byte-identical documents: grid points are
//! computed by index (not accumulation) and rows are assembled in grid
//! order even though they are evaluated in parallel.

use rayon::prelude::*;

use crate::bloch::maximally_coherent_state;
use crate::correlations::correlation_analytic;
use crate::error::{Error, Result};
use crate::indicators::{k_pm, quantum_time, witness_all, LgSign};
use crate::liouvillian::evolve_expectations;
use crate::params::SystemParams;
use crate::scalar::{lit, to64, Scalar};

/// One sweepable/sampleable quantity, i.e. one CSV column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// l1-norm of coherence of the evolved maximally coherent state.
    CoherenceL1,
    /// Three-measurement inequality function (alias of the minus branch).
    K3,
    /// Plus branch of the inequality function.
    KPlus,
    /// Minus branch of the inequality function.
    KMinus,
    /// No-signaling witness (all three formulations cross-checked).
    WitnessQ,
    /// σx autocorrelation.
    Correlation,
    /// Violation lifetime of the plus branch.
    TauQPlus,
    /// Violation lifetime of the minus branch.
    TauQMinus,
    /// Coherence half-life.
    TauC,
}

impl Quantity {
    pub const ALL: [Quantity; 9] = [
        Quantity::CoherenceL1,
        Quantity::K3,
        Quantity::KPlus,
        Quantity::KMinus,
        Quantity::WitnessQ,
        Quantity::Correlation,
        Quantity::TauQPlus,
        Quantity::TauQMinus,
        Quantity::TauC,
    ];

    /// The CSV column name / command-line token.
    pub fn token(self) -> &'static str {
        match self {
            Quantity::CoherenceL1 => "C_l1",
            Quantity::K3 => "K3",
            Quantity::KPlus => "K_plus",
            Quantity::KMinus => "K_minus",
            Quantity::WitnessQ => "W_q",
            Quantity::Correlation => "correlation",
            Quantity::TauQPlus => "tau_q_plus",
            Quantity::TauQMinus => "tau_q_minus",
            Quantity::TauC => "tau_c",
        }
    }

    pub fn from_token(token: &str) -> Result<Self> {
        Quantity::ALL
            .iter()
            .copied()
            .find(|q| q.token() == token)
            .ok_or_else(|| {
                let valid: Vec<&str> = Quantity::ALL.iter().map(|q| q.token()).collect();
                Error::InvalidSweep(format!(
                    "unknown quantity `{token}` (valid: {})",
                    valid.join(", ")
                ))
            })
    }

    /// Quantities that are functions of temperature (one value per system),
    /// as opposed to functions of the measurement time τ.
    pub fn is_temperature_quantity(self) -> bool {
        matches!(
            self,
            Quantity::TauQPlus | Quantity::TauQMinus | Quantity::TauC
        )
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// What the sweep iterates over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Sample τ-dependent indicators at fixed parameters.
    TimeSeries,
    /// Sample characteristic times across reservoir temperatures.
    TemperatureSweep,
}

/// A uniform closed grid start..=stop with `count` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid<T> {
    pub start: T,
    pub stop: T,
    pub count: usize,
}

impl<T: Scalar> Grid<T> {
    pub fn new(start: T, stop: T, count: usize) -> Self {
        Self { start, stop, count }
    }

    /// The grid points, computed by index so repeated calls are
    /// bit-identical and the endpoints are exact.
    pub fn points(&self) -> Vec<T> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.start],
            n => (0..n)
                .map(|i| {
                    if i == n - 1 {
                        self.stop
                    } else {
                        let t = T::from_usize(i).expect("grid index fits the scalar")
                            / T::from_usize(n - 1).expect("grid size fits the scalar");
                        self.start + (self.stop - self.start) * t
                    }
                })
                .collect(),
        }
    }
}

/// A validated-on-use description of one sweep run.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec<T> {
    pub mode: SweepMode,
    pub omega: T,
    pub gamma0: T,
    /// Fixed reservoir temperature; ignored in temperature-sweep mode,
    /// where the grid supplies the temperatures.
    pub temperature: T,
    /// τ grid in time-series mode, temperature grid in sweep mode.
    pub grid: Grid<T>,
    /// Columns to emit, in order.
    pub quantities: Vec<Quantity>,
}

impl<T: Scalar> SweepSpec<T> {
    /// Check the structural invariants (grid shape, quantity/mode fit).
    /// Physical parameter validation happens when the run builds its
    /// [`SystemParams`].
    pub fn validate(&self) -> Result<()> {
        if self.grid.count < 2 {
            return Err(Error::InvalidSweep(format!(
                "grid needs at least 2 points, got {}",
                self.grid.count
            )));
        }
        if !(self.grid.start >= T::zero()) {
            return Err(Error::InvalidSweep(format!(
                "grid must start at a non-negative value, got {}",
                to64(self.grid.start)
            )));
        }
        if !(self.grid.start < self.grid.stop) {
            return Err(Error::InvalidSweep(format!(
                "grid start must lie below its stop, got {}..{}",
                to64(self.grid.start),
                to64(self.grid.stop)
            )));
        }
        if self.quantities.is_empty() {
            return Err(Error::InvalidSweep(
                "at least one quantity is required".into(),
            ));
        }
        match self.mode {
            SweepMode::TimeSeries => {
                if let Some(q) = self
                    .quantities
                    .iter()
                    .find(|q| q.is_temperature_quantity())
                {
                    return Err(Error::InvalidSweep(format!(
                        "`{q}` is constant in time; it belongs to a temperature sweep"
                    )));
                }
            }
            SweepMode::TemperatureSweep => {
                if let Some(q) = self
                    .quantities
                    .iter()
                    .find(|q| !q.is_temperature_quantity())
                {
                    return Err(Error::InvalidSweep(format!(
                        "`{q}` is a time-series quantity; temperature sweeps support \
                         only tau_q_plus, tau_q_minus, tau_c"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One sampled indicator over a τ-grid.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorSeries<T> {
    quantity: Quantity,
    tau_grid: Vec<T>,
    values: Vec<T>,
}

impl<T: Scalar> IndicatorSeries<T> {
    pub fn quantity(&self) -> Quantity {
        self.quantity
    }

    pub fn tau_grid(&self) -> &[T] {
        &self.tau_grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.tau_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau_grid.is_empty()
    }
}

fn evaluate_time_quantity<T: Scalar>(
    params: &SystemParams<T>,
    quantity: Quantity,
    tau: T,
) -> Result<T> {
    Ok(match quantity {
        Quantity::CoherenceL1 => {
            evolve_expectations(params, &maximally_coherent_state(), tau).coherence_l1()
        }
        Quantity::K3 | Quantity::KMinus => k_pm(params, tau, LgSign::Minus),
        Quantity::KPlus => k_pm(params, tau, LgSign::Plus),
        Quantity::Correlation => correlation_analytic(params, tau),
        Quantity::WitnessQ => {
            let w = witness_all(params, tau);
            if !w.formulations_agree(lit::<T>(1e-10)) {
                return Err(Error::CrossCheckFailed(format!(
                    "witness formulations disagree at tau = {tau}: spread {:.3e}",
                    to64(w.spread())
                )));
            }
            w.value()
        }
        Quantity::TauQPlus | Quantity::TauQMinus | Quantity::TauC => {
            return Err(Error::InvalidSweep(format!(
                "`{quantity}` does not vary with time"
            )))
        }
    })
}

/// Sample one τ-dependent quantity over a grid, in parallel, preserving
/// grid order. Witness samples re-derive the value through all three
/// formulations and fail the run if they disagree beyond 1e-10.
pub fn sample_indicator<T: Scalar>(
    params: &SystemParams<T>,
    quantity: Quantity,
    tau_grid: &[T],
) -> Result<IndicatorSeries<T>> {
    let values = tau_grid
        .par_iter()
        .map(|&tau| evaluate_time_quantity(params, quantity, tau))
        .collect::<Result<Vec<T>>>()?;
    Ok(IndicatorSeries {
        quantity,
        tau_grid: tau_grid.to_vec(),
        values,
    })
}

fn format_cell<T: Scalar>(x: T) -> String {
    if x == T::infinity() {
        "inf".to_string()
    } else {
        format!("{x:.12e}")
    }
}

/// Run a time-series spec and return the CSV document.
pub fn run_time_series<T: Scalar>(spec: &SweepSpec<T>) -> Result<String> {
    spec.validate()?;
    if spec.mode != SweepMode::TimeSeries {
        return Err(Error::InvalidSweep(
            "run_time_series requires a time-series spec".into(),
        ));
    }
    let params = SystemParams::new(spec.omega, spec.gamma0, spec.temperature)?;
    let taus = spec.grid.points();
    let columns = spec
        .quantities
        .iter()
        .map(|&q| sample_indicator(&params, q, &taus))
        .collect::<Result<Vec<_>>>()?;

    let mut out = String::from("tau");
    for q in &spec.quantities {
        out.push(',');
        out.push_str(q.token());
    }
    out.push('\n');
    for (i, &tau) in taus.iter().enumerate() {
        out.push_str(&format_cell(tau));
        for col in &columns {
            out.push(',');
            out.push_str(&format_cell(col.values()[i]));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Run a temperature-sweep spec and return the CSV document.
pub fn run_temperature_sweep<T: Scalar>(spec: &SweepSpec<T>) -> Result<String> {
    spec.validate()?;
    if spec.mode != SweepMode::TemperatureSweep {
        return Err(Error::InvalidSweep(
            "run_temperature_sweep requires a temperature-sweep spec".into(),
        ));
    }
    let temps = spec.grid.points();
    let rows = temps
        .par_iter()
        .map(|&t| -> Result<Vec<T>> {
            let params = SystemParams::new(spec.omega, spec.gamma0, t)?;
            spec.quantities
                .iter()
                .map(|&q| {
                    Ok(match q {
                        Quantity::TauQPlus => {
                            quantum_time(&params, LgSign::Plus).value.as_float()
                        }
                        Quantity::TauQMinus => {
                            quantum_time(&params, LgSign::Minus).value.as_float()
                        }
                        Quantity::TauC => params.coherence_halflife().as_float(),
                        _ => {
                            return Err(Error::InvalidSweep(format!(
                                "`{q}` does not vary with temperature"
                            )))
                        }
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut out = String::from("T");
    for q in &spec.quantities {
        out.push(',');
        out.push_str(q.token());
    }
    out.push('\n');
    for (t, row) in temps.iter().zip(&rows) {
        out.push_str(&format_cell(*t));
        for v in row {
            out.push(',');
            out.push_str(&format_cell(*v));
        }
        out.push('\n');
    }
    Ok(out)
}
