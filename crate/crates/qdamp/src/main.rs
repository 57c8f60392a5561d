//! Command-line front end: deterministic CSV sweeps plus a
//! cross-validation battery, wired to the `qdamp` library.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use qdamp::{run_temperature_sweep, run_time_series, Grid, Quantity, SweepMode, SweepSpec};

#[derive(Parser)]
#[command(
    name = "qdamp",
    version,
    about = "Quantumness indicators for a damped two-level system",
    long_about = "Samples correlation functions, Leggett-Garg-type inequality functions, \
                  the no-signaling-in-time witness, and coherence measures for a qubit \
                  damped by a thermal reservoir, emitting deterministic CSV."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample time-dependent indicators on a tau grid at fixed parameters
    Series(SeriesArgs),
    /// Sweep the reservoir temperature and emit the characteristic times
    Tsweep(TsweepArgs),
    /// Run the cross-validation battery; exits nonzero on any failure
    Check,
}

#[derive(Args)]
struct CommonArgs {
    /// Level splitting of the two-level system (natural units)
    #[arg(long)]
    omega: Option<f64>,

    /// Spontaneous (zero-temperature) damping rate
    #[arg(long)]
    gamma0: Option<f64>,

    /// Comma-separated output columns (see long help for tokens)
    #[arg(long, value_name = "LIST")]
    quantities: Option<String>,

    /// TOML file supplying defaults for any flag not given explicitly
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output file, or `-`/`stdout` for standard output
    #[arg(long, value_name = "PATH")]
    output: Option<String>,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Reservoir temperature (natural units)
    #[arg(long)]
    temperature: Option<f64>,

    /// Tau grid as lo:hi:count
    #[arg(long, value_name = "LO:HI:N")]
    tau_range: Option<String>,
}

#[derive(Args)]
struct TsweepArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Temperature grid as lo:hi:count
    #[arg(long, value_name = "LO:HI:N")]
    t_range: Option<String>,
}

/// Optional configuration file; every key mirrors a flag, and explicit
/// flags win over file values.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    omega: Option<f64>,
    gamma0: Option<f64>,
    temperature: Option<f64>,
    tau_range: Option<String>,
    t_range: Option<String>,
    quantities: Option<String>,
    output: Option<String>,
}

fn load_config(path: Option<&PathBuf>) -> anyhow::Result<FileConfig> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .with_context(|| format!("reading config file {}", p.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing config file {}", p.display()))
        }
    }
}

fn parse_range(range: &str) -> anyhow::Result<(f64, f64, usize)> {
    let parts: Vec<&str> = range.split(':').collect();
    let [lo, hi, count] = parts[..] else {
        bail!("range must look like lo:hi:count, got `{range}`");
    };
    Ok((
        lo.parse().with_context(|| format!("bad range start `{lo}`"))?,
        hi.parse().with_context(|| format!("bad range stop `{hi}`"))?,
        count
            .parse()
            .with_context(|| format!("bad range count `{count}`"))?,
    ))
}

fn parse_quantities(list: &str) -> anyhow::Result<Vec<Quantity>> {
    let parsed = list
        .split(',')
        .map(str::trim)
        .filter(|token| !token.is_empty())
        .map(Quantity::from_token)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(parsed)
}

fn emit(csv: &str, output: Option<String>) -> anyhow::Result<()> {
    match output.as_deref() {
        None | Some("-") | Some("stdout") => {
            print!("{csv}");
            Ok(())
        }
        Some(path) => fs::write(path, csv).with_context(|| format!("writing {path}")),
    }
}

fn run_series(args: SeriesArgs) -> anyhow::Result<()> {
    let file = load_config(args.common.config.as_ref())?;
    let range = args
        .tau_range
        .or(file.tau_range)
        .context("a tau grid is required: pass --tau-range lo:hi:count or set tau_range in the config")?;
    let (lo, hi, count) = parse_range(&range)?;
    let quantities = match args.common.quantities.or(file.quantities) {
        Some(list) => parse_quantities(&list)?,
        None => Quantity::ALL
            .iter()
            .copied()
            .filter(|q| !q.is_temperature_quantity())
            .collect(),
    };
    let spec = SweepSpec {
        mode: SweepMode::TimeSeries,
        omega: args.common.omega.or(file.omega).unwrap_or(1.0),
        gamma0: args.common.gamma0.or(file.gamma0).unwrap_or(0.0),
        temperature: args.temperature.or(file.temperature).unwrap_or(0.0),
        grid: Grid::new(lo, hi, count),
        quantities,
    };
    emit(&run_time_series(&spec)?, args.common.output.or(file.output))
}

fn run_tsweep(args: TsweepArgs) -> anyhow::Result<()> {
    let file = load_config(args.common.config.as_ref())?;
    let range = args
        .t_range
        .or(file.t_range)
        .unwrap_or_else(|| "0:60:61".to_string());
    let (lo, hi, count) = parse_range(&range)?;
    let quantities = match args.common.quantities.or(file.quantities) {
        Some(list) => parse_quantities(&list)?,
        None => Quantity::ALL
            .iter()
            .copied()
            .filter(|q| q.is_temperature_quantity())
            .collect(),
    };
    let spec = SweepSpec {
        mode: SweepMode::TemperatureSweep,
        omega: args.common.omega.or(file.omega).unwrap_or(1.0),
        gamma0: args.common.gamma0.or(file.gamma0).unwrap_or(0.0),
        temperature: 0.0,
        grid: Grid::new(lo, hi, count),
        quantities,
    };
    emit(
        &run_temperature_sweep(&spec)?,
        args.common.output.or(file.output),
    )
}

fn run_check() -> anyhow::Result<()> {
    let results = qdamp::checks::run_all();
    let mut failures = 0_usize;
    for r in &results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", r.name, r.detail);
        if !r.passed {
            failures += 1;
        }
    }
    if failures > 0 {
        bail!("{failures} of {} checks failed", results.len());
    }
    println!("all {} checks passed", results.len());
    Ok(())
}

fn main() -> anyhow::Result<()> {
    match Cli::parse().command {
        Command::Series(args) => run_series(args),
        Command::Tsweep(args) => run_tsweep(args),
        Command::Check => run_check(),
    }
}
