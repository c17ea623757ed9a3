//! End-to-end checks of the binary: output determinism, exit codes, and the
//! JSON interchange path.

use std::process::{Command, Output};

fn matlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = matlie(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn repeated_invocations_are_byte_identical() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["delta", "--n", "4"],
        vec!["delta", "--n", "4", "--format", "json"],
        vec!["basis", "--n", "3", "--mu", "-1"],
        vec!["basis", "--n", "2", "--mu", "1", "--format", "text"],
        vec!["dim", "--n", "3", "--mu", "-1"],
        vec!["structure", "--n", "2", "--mu", "1"],
        vec!["compare", "--n", "2", "--mu", "1"],
        vec!["jordan", "--n", "3", "--mu", "1/2,1"],
    ];
    for args in &commands {
        let first = matlie(args);
        let second = matlie(args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?} not deterministic");
        assert_eq!(first.stderr, second.stderr, "{args:?} not deterministic");
    }
    println!("acceptance criterion 8 (CLI determinism): PASS");
}

#[test]
fn json_round_trips_through_the_cli() {
    let emitted = stdout_of(&["hblock", "--n", "2", "--mu", "1", "--format", "json"]);

    let dir = std::env::temp_dir().join(format!("matlie-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h22.json");
    std::fs::write(&path, &emitted).unwrap();

    let report = stdout_of(&[
        "oracle",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert!(
        report.starts_with("dimension: 4\n"),
        "unexpected oracle output: {report}"
    );

    // parse -> re-emit through the library is the identity on CLI output
    let parsed = matlie::json::matrix_from_json(emitted.trim()).unwrap();
    assert_eq!(matlie::json::matrix_to_json(&parsed), emitted.trim());

    std::fs::remove_dir_all(&dir).ok();
    println!("acceptance criterion 8 (CLI JSON round trip): PASS");
}

#[test]
fn spec_example_outputs() {
    assert_eq!(stdout_of(&["dim", "--n", "3", "--mu", "-1"]), "7\n");
    assert_eq!(stdout_of(&["dim", "--n", "4", "--mu", "1"]), "8\n");
    assert_eq!(stdout_of(&["dim", "--n", "5", "--mu", "2"]), "5\n");
    assert_eq!(
        stdout_of(&["delta", "--n", "2", "--format", "json"]),
        "{\"rows\":2,\"cols\":2,\"entries\":[[\"0\",\"0\"],[\"-1\",\"0\"],[\"1\",\"0\"],[\"-1\",\"0\"]]}\n"
    );
    assert_eq!(
        stdout_of(&["compare", "--n", "4", "--mu", "1"]),
        "span_equal: true, dim: 8\n"
    );
}

#[test]
fn domain_errors_exit_one_and_name_the_constraint() {
    let out = matlie(&["hblock", "--n", "1", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("0 != mu != (-1)^(n+1)"),
        "constraint not cited: {stderr}"
    );
    assert!(out.stdout.is_empty(), "data stream must stay clean");

    let missing = matlie(&["oracle", "--input", "/nonexistent/a.json"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        matlie(&["delta", "--n", "2", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(matlie(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(matlie(&["dim", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        matlie(&["dim", "--n", "3", "--mu", "1.5"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_reports_every_suite() {
    let report = stdout_of(&["verify", "--n-max", "3"]);
    for suite in ["pascal", "solver", "oracle", "lie"] {
        assert!(
            report.contains(&format!("{suite}: PASS")),
            "missing suite {suite} in: {report}"
        );
    }
}

#[test]
fn mu_accepts_exact_rational_and_complex_forms() {
    assert_eq!(stdout_of(&["dim", "--n", "2", "--mu", "1/2"]), "2\n");
    // mu = i
    assert_eq!(stdout_of(&["dim", "--n", "2", "--mu", "0,1"]), "2\n");
    // hard case via explicit sign
    assert_eq!(stdout_of(&["dim", "--n", "2", "--mu", "1"]), "4\n");
}
