//! Process-level tests of the compiled binary: argument handling, config
//! merging, output routing, and the exact CSV shape.

use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdamp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

#[test]
fn help_lists_the_subcommands() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["series", "tsweep", "check"] {
        assert!(text.contains(name), "help is missing `{name}`:\n{text}");
    }
}

#[test]
fn a_subcommand_is_required() {
    let out = run(&[]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("Usage"));
}

#[test]
fn series_requires_a_tau_grid() {
    let out = run(&["series", "--gamma0", "0.04"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("tau-range"), "{}", stderr(&out));
}

#[test]
fn unknown_quantity_tokens_are_named_in_the_error() {
    let out = run(&[
        "series",
        "--tau-range",
        "0:1:5",
        "--quantities",
        "W_q,bogus",
    ]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(err.contains("bogus") && err.contains("W_q"), "{err}");
}

#[test]
fn malformed_ranges_are_rejected() {
    for bad in ["0:1", "a:1:5", "0:1:many"] {
        let out = run(&["series", "--tau-range", bad]);
        assert!(!out.status.success(), "`{bad}` should be rejected");
    }
}

#[test]
fn temperature_sweeps_reject_time_series_quantities() {
    let out = run(&["tsweep", "--gamma0", "0.04", "--quantities", "W_q"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("W_q"), "{}", stderr(&out));
}

#[test]
fn a_minimal_series_emits_the_exact_first_row() {
    let out = run(&[
        "series",
        "--gamma0",
        "0.04",
        "--tau-range",
        "0:6.283185307179586:5",
        "--quantities",
        "C_l1,K_minus,W_q",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("tau,C_l1,K_minus,W_q"));
    assert_eq!(
        lines.next(),
        Some("0.000000000000e0,1.000000000000e0,1.000000000000e0,0.000000000000e0")
    );
    assert_eq!(text.lines().count(), 6);
    assert!(text.ends_with('\n'));
    assert!(!text.contains('\r'), "line endings must be LF only");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["series", "--gamma0", "0.01", "--tau-range", "0:10:50"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn undamped_sweeps_render_the_inf_sentinel() {
    let out = run(&["tsweep", "--gamma0", "0", "--t-range", "0:10:3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("T,tau_q_plus,tau_q_minus,tau_c"));
    for line in lines {
        let (_, cells) = line.split_once(',').expect("data row");
        assert_eq!(cells, "inf,inf,inf", "row `{line}`");
    }
}

#[test]
fn config_files_supply_defaults_and_flags_override_them() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("run.toml");
    fs::write(
        &path,
        "omega = 2.0\ngamma0 = 0.1\ntau_range = \"0:1:3\"\nquantities = \"K3\"\n",
    )
    .expect("config written");
    let config = path.to_str().expect("utf-8 path");

    let from_file = run(&["series", "--config", config]);
    assert!(from_file.status.success(), "{}", stderr(&from_file));
    assert_eq!(stdout(&from_file).lines().next(), Some("tau,K3"));
    assert_eq!(stdout(&from_file).lines().count(), 4);

    let overridden = run(&["series", "--config", config, "--quantities", "W_q"]);
    assert!(overridden.status.success(), "{}", stderr(&overridden));
    assert_eq!(stdout(&overridden).lines().next(), Some("tau,W_q"));
}

#[test]
fn unknown_config_keys_are_rejected() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("typo.toml");
    fs::write(&path, "omga = 2.0\n").expect("config written");
    let out = run(&["series", "--tau-range", "0:1:3", "--config", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("omga"), "{}", stderr(&out));
}

#[test]
fn output_routes_to_files_and_back_to_stdout() {
    let args = ["series", "--gamma0", "0.04", "--tau-range", "0:5:20"];
    let to_stdout = run(&args);
    assert!(to_stdout.status.success());

    let explicit = run(&[&args[..], &["--output", "stdout"]].concat());
    assert_eq!(to_stdout.stdout, explicit.stdout);

    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("series.csv");
    let to_file = run(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert!(to_file.status.success(), "{}", stderr(&to_file));
    assert!(to_file.stdout.is_empty());
    assert_eq!(fs::read(&path).expect("file written"), to_stdout.stdout);
}

#[test]
fn halflife_column_matches_its_definition() {
    let out = run(&[
        "tsweep",
        "--omega",
        "1",
        "--gamma0",
        "0.04",
        "--t-range",
        "0:2:5",
        "--quantities",
        "tau_c",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    for line in stdout(&out).lines().skip(1) {
        let (t_cell, tau_cell) = line.split_once(',').expect("two columns");
        let temperature: f64 = t_cell.parse().expect("numeric temperature");
        let tau_c: f64 = tau_cell.parse().expect("numeric half-life");
        let expected = qdamp::SystemParams64::new(1.0, 0.04, temperature)
            .expect("valid parameters")
            .coherence_halflife()
            .finite()
            .expect("damped system");
        assert!(
            (tau_c - expected).abs() <= 1e-11 * expected,
            "row `{line}` vs expected {expected}"
        );
    }
}
