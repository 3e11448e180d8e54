//! CLI acceptance: golden-file checks for every command at threads = 1,
//! byte-identical reruns, and the exit-code contract
//! (0 positive, 1 negative, 2 input error, 3 inconclusive).
//!
//! Regenerate golden files with `UPDATE_GOLDEN=1 cargo test -p quench-cli`.

use std::path::{Path, PathBuf};
use std::process::Output;

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf()
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_quench"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}

const FIX: &str = "crates/cli/tests/fixtures";

fn fixture(name: &str) -> String {
    format!("{FIX}/{name}")
}

/// Runs the command twice, checks byte-identical stdout and the expected
/// exit code, and compares stdout against the committed golden file.
fn golden_case(name: &str, args: &[&str], expected_exit: i32) {
    let first = run(args);
    let second = run(args);
    assert_eq!(
        first.status.code(),
        Some(expected_exit),
        "{name}: exit code (stderr: {})",
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(second.status.code(), Some(expected_exit), "{name}: rerun exit code");
    assert_eq!(
        first.stdout, second.stdout,
        "{name}: reruns must be byte-identical"
    );

    let golden_path = golden_dir().join(format!("{name}.txt"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden_path, &first.stdout).expect("write golden");
        return;
    }
    let golden = std::fs::read(&golden_path)
        .unwrap_or_else(|e| panic!("{name}: missing golden file {golden_path:?}: {e}"));
    assert_eq!(
        first.stdout,
        golden,
        "{name}: stdout diverges from golden file\n--- got ---\n{}",
        String::from_utf8_lossy(&first.stdout)
    );
}

#[test]
fn golden_delta() {
    golden_case(
        "delta",
        &["delta", &fixture("qubit_075.json"), &fixture("h_gap1.json")],
        0,
    );
}

#[test]
fn golden_convert_with_certificate() {
    golden_case(
        "convert_certificate",
        &[
            "convert",
            &fixture("qubit_075.json"),
            &fixture("qubit_06.json"),
            "--certificate",
        ],
        0,
    );
}

#[test]
fn golden_convert_negative() {
    golden_case(
        "convert_negative",
        &[
            "convert",
            &fixture("max_mixed_2.json"),
            &fixture("pure_qubit.json"),
        ],
        1,
    );
}

#[test]
fn golden_nielsen_positive_and_negative() {
    golden_case(
        "nielsen_positive",
        &["nielsen", &fixture("psi_64.json"), &fixture("phi_82.json")],
        0,
    );
    golden_case(
        "nielsen_negative",
        &["nielsen", &fixture("phi_82.json"), &fixture("psi_64.json")],
        1,
    );
}

#[test]
fn golden_witness_singleton() {
    golden_case("witness_pure", &["witness", &fixture("pure_qubit.json")], 0);
    golden_case(
        "witness_free_state",
        &["witness", &fixture("max_mixed_2.json")],
        1,
    );
}

#[test]
fn golden_witness_multi_point() {
    golden_case(
        "witness_hull_member",
        &[
            "witness",
            &fixture("qubit_075.json"),
            &fixture("free_pair.json"),
        ],
        1,
    );
}

#[test]
fn witness_writes_hamiltonian_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("witness_h.json");
    let output = run(&[
        "witness",
        &fixture("pure_qubit.json"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["dim"], 2);
    assert!((parsed["matrix"][0][0][0].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn golden_measure() {
    golden_case(
        "measure_pure",
        &["measure", &fixture("pure_qubit.json"), "--eps", "0.1"],
        0,
    );
    golden_case(
        "measure_free",
        &["measure", &fixture("max_mixed_2.json"), "--eps", "0.1"],
        0,
    );
}

#[test]
fn golden_sweep() {
    golden_case("sweep_hk", &["sweep", &fixture("sweep_hk.json")], 0);
    golden_case("sweep_empty", &["sweep", &fixture("sweep_empty.json")], 0);
}

#[test]
fn sweep_rejects_unknown_family() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(
        &spec,
        format!(
            "{{\"state\": \"{}\", \"family\": \"bogus\", \"grid\": [1]}}",
            fixture("qubit_075.json")
        ),
    )
    .unwrap();
    let output = run(&["sweep", spec.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("unknown family"));
}

#[test]
fn golden_verify() {
    golden_case("verify_all_n20", &["verify", "all", "--n", "20"], 0);
}

#[test]
fn verify_corrupted_tolerance_fails() {
    let output = run(&[
        "verify",
        "conversion",
        "--n",
        "5",
        "--corrupt-tolerance",
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn verify_unknown_suite_is_input_error() {
    let output = run(&["verify", "bogus"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_zero_cases_warns_and_passes() {
    let output = run(&["verify", "thermo", "--n", "0"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&output.stdout).contains("vacuous"));
}

#[test]
fn input_errors_cite_field_paths() {
    let output = run(&["delta", &fixture("bad_dim.json"), &fixture("h_gap1.json")]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("matrix"), "diagnostic names the field: {stderr}");

    let dir = tempfile::tempdir().unwrap();
    let mangled = dir.path().join("mangled.json");
    std::fs::write(&mangled, "{\"dim\": 2, \"matrix\": [[[0.5,").unwrap();
    let output = run(&[
        "delta",
        mangled.to_str().unwrap(),
        &fixture("h_gap1.json"),
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn nielsen_rejects_unnormalized_amplitudes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("unnormalized.json");
    std::fs::write(
        &bad,
        "{\"dim\": 2, \"matrix\": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]}",
    )
    .unwrap();
    let output = run(&["nielsen", bad.to_str().unwrap(), &fixture("phi_82.json")]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_output() {
    let one = run(&["verify", "witness", "--n", "30"]);
    let four = run(&["verify", "witness", "--n", "30", "--threads", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn flag_validation() {
    let output = run(&[
        "measure",
        &fixture("pure_qubit.json"),
        "--eps",
        "1.0",
        "--emax",
        "1.0",
    ]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["verify", "all", "--n", "1", "--threads", "0"]);
    assert_eq!(output.status.code(), Some(2));
}
