//! End-to-end tests of the command-line surface: exit codes, diagnostics,
//! flag plumbing and deterministic exports.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn cabinlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cabinlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_data(args: &[&str]) -> Output {
    let data = data_dir();
    let mut full = vec!["--data", data.to_str().unwrap()];
    full.extend_from_slice(args);
    cabinlab(&full)
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn validate_shipped_dataset_exits_zero_with_transposition_note() {
    let out = with_data(&["validate"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("orientation corrected"), "{text}");
    assert!(text.contains("0 finding(s)"), "{text}");
}

#[test]
fn validate_missing_file_names_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = cabinlab(&["--data", dir.path().to_str().unwrap(), "validate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("layouts.csv"), "{}", stderr(&out));
}

#[test]
fn validate_corrupt_row_names_row_and_column() {
    let dir = tempfile::tempdir().unwrap();
    for name in [
        "layouts.csv",
        "fares.csv",
        "aircraft_specs.csv",
        "emissions_samples.csv",
    ] {
        fs::copy(data_dir().join(name), dir.path().join(name)).unwrap();
    }
    let samples = dir.path().join("emissions_samples.csv");
    let mut text = fs::read_to_string(&samples).unwrap();
    text.push_str("A320-200,short,bogus,1.0\n");
    fs::write(&samples, text).unwrap();
    let out = cabinlab(&["--data", dir.path().to_str().unwrap(), "validate"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("row 26"), "{err}");
    assert!(err.contains("passengers"), "{err}");
}

#[test]
fn fit_reports_eight_fits_and_honors_the_filter() {
    let out = with_data(&["fit"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("8 fit(s)"));

    let out = with_data(&["fit", "--aircraft", "A320-200"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2 fit(s)"), "{text}");
    assert!(!text.contains("737-800"), "{text}");

    let out = with_data(&["fit", "--aircraft", "DC-3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("DC-3"));
}

#[test]
fn reconcile_shipped_dataset_exits_zero_without_mismatches() {
    let out = with_data(&["reconcile"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("mismatch 0"), "{}", stdout(&out));
}

#[test]
fn reconcile_strict_tolerance_exits_nonzero() {
    let out = with_data(&["--tolerance", "0.0005", "reconcile"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(!text.contains("mismatch 0"), "{text}");
}

#[test]
fn reconcile_perturbed_constants_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let constants = dir.path().join("constants.toml");
    fs::write(&constants, "[seat_weight_kg]\nbusiness = 150.0\n").unwrap();
    let out = with_data(&["--constants", constants.to_str().unwrap(), "reconcile"]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("[mismatch]"), "{}", stdout(&out));
}

#[test]
fn scenario_accepts_custom_reallocation_files() {
    // Move all business floor into economy on every aircraft; areas are
    // the composite baseline values.
    let dir = tempfile::tempdir().unwrap();
    let scenario = dir.path().join("biz_to_econ.toml");
    fs::write(
        &scenario,
        concat!(
            "name = \"biz_to_econ\"\n",
            "[\"A320-200\"]\neconomy = 2924.3775\nbusiness = 0.0\n",
            "[\"737-800\"]\neconomy = 3237.3025\nbusiness = 0.0\n",
            "[\"A330-200\"]\neconomy = 5849.9575\nbusiness = 0.0\n",
            "[\"777-200LR\"]\neconomy = 7144.985\nbusiness = 0.0\n",
        ),
    )
    .unwrap();
    let out = with_data(&["--scenario", scenario.to_str().unwrap(), "scenario"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("biz_to_econ"), "{}", stdout(&out));

    // Breaking conservation is rejected.
    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "name = \"bad\"\n[\"A320-200\"]\neconomy = 9999.0\n").unwrap();
    let out = with_data(&["--scenario", bad.to_str().unwrap(), "scenario"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not conserved"), "{}", stderr(&out));
}

#[test]
fn export_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a");
    let out2 = dir.path().join("b");
    for out in [&out1, &out2] {
        let run = with_data(&["--out", out.to_str().unwrap(), "export"]);
        assert!(run.status.success(), "{}", stderr(&run));
    }
    let mut names: Vec<String> = fs::read_dir(&out1)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(names.contains(&"table_emissions_per_flight.csv".to_string()));
    assert!(names.contains(&"fig2b_per_flight_emissions_delta.csv".to_string()));
    for name in names {
        let a = fs::read(out1.join(&name)).unwrap();
        let b = fs::read(out2.join(&name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }
}

#[test]
fn export_without_out_is_a_usage_error() {
    let out = with_data(&["export"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_format_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = with_data(&[
        "--out",
        dir.path().to_str().unwrap(),
        "--format",
        "json",
        "export",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let table = fs::read_to_string(dir.path().join("table_emissions_per_flight.json")).unwrap();
    assert!(table.contains("\"metric\": \"emissions_per_flight\""));
}

#[test]
fn config_file_supplies_flag_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    fs::write(
        &config,
        format!(
            "data = {:?}\nload_factor = 0.5\nscenarios = [\"baseline\", \"all_economy\"]\n",
            data_dir().to_str().unwrap()
        ),
    )
    .unwrap();

    // Config alone: half load factor.
    let halved = cabinlab(&["--config", config.to_str().unwrap(), "scenario"]);
    assert!(halved.status.success(), "{}", stderr(&halved));
    // Flag overrides config: matches a plain full-load run.
    let full = cabinlab(&[
        "--config",
        config.to_str().unwrap(),
        "--load-factor",
        "1.0",
        "scenario",
    ]);
    let plain = with_data(&["scenario"]);
    assert_eq!(stdout(&full), stdout(&plain));
    assert_ne!(stdout(&halved), stdout(&plain));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let out = with_data(&["--frobnicate", "validate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reprice_prints_body_and_per_aircraft_rows() {
    let out = with_data(&["reprice"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("narrow"), "{text}");
    assert!(text.contains("A320-200"), "{text}");
    // Wide-body short haul reprices downward; narrow upward.
    assert!(text.contains("-10.37"), "{text}");
    assert!(text.contains("13.25"), "{text}");
}

#[test]
fn elasticity_reports_demand_and_budget_share() {
    let out = with_data(&["elasticity", "--elasticity", "-1.42"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("-8.51"), "{text}");
    assert!(text.contains("0.483%"), "{text}");
}
