//! End-to-end tests of the `codazzi` binary: file formats, report envelope,
//! exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_codazzi"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("codazzi-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_fixture(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

const ABELIAN4: &str = r#"{"dim": 4, "field": "rational", "brackets": []}"#;

const HEISENBERG3: &str = r#"{
    "dim": 3,
    "field": "rational",
    "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "value": "1"}]}]
}"#;

const SU2_FLOAT: &str = r#"{
    "dim": 3,
    "field": "float",
    "brackets": [
        {"i": 1, "j": 2, "terms": [{"k": 3, "value": 1.0}]},
        {"i": 2, "j": 3, "terms": [{"k": 1, "value": 1.0}]},
        {"i": 1, "j": 3, "terms": [{"k": 2, "value": -1.0}]}
    ]
}"#;

#[test]
fn check_abelian_passes_with_zero_norms() {
    let path = scratch("abelian4.json");
    write_fixture(&path, ABELIAN4);
    let out = run(&["check", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["pass"], true);
    let r = &report["results"];
    assert_eq!(r["jacobi_defect"], 0.0);
    assert_eq!(r["codazzi_defect_norm"], 0.0);
    assert_eq!(r["nabla_norm"], 0.0);
    assert_eq!(r["divergence_norm"], 0.0);
    assert_eq!(r["harmonic"], true);
    assert_eq!(r["structure"]["pass"], true);
    assert!(report["input_digest"].as_str().unwrap().len() == 64);
}

#[test]
fn check_heisenberg_fails_and_pinpoints_condition_one() {
    let path = scratch("heisenberg3.json");
    write_fixture(&path, HEISENBERG3);
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["pass"], false);
    let r = &report["results"];
    assert_eq!(r["harmonic"], false);
    assert_eq!(r["structure"]["pass"], false);
    let subalgebra = r["structure"]["subalgebra"].as_array().unwrap();
    assert_eq!(subalgebra[0]["ok"], false);
    assert_eq!(subalgebra[1]["ok"], true);
    // equivalence between structure failure and nonzero defect is recorded
    assert_eq!(r["structure_consistent"], true);
    assert_eq!(r["equivalence_consistent"], true);
}

#[test]
fn check_with_metric_and_tensor_files() {
    let alg = scratch("su2f.json");
    write_fixture(&alg, SU2_FLOAT);
    let metric = scratch("metric3.json");
    write_fixture(
        &metric,
        r#"{"gram": [[2.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 2.0]]}"#,
    );
    let tensor = scratch("tensor3.json");
    write_fixture(
        &tensor,
        r#"{"matrix": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]}"#,
    );
    let out = run(&[
        "check",
        alg.to_str().unwrap(),
        "--metric",
        metric.to_str().unwrap(),
        "--tensor",
        tensor.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    // scalar operators are parallel, hence Codazzi
    assert_eq!(report["results"]["harmonic"], true);
    assert_eq!(report["results"]["parallel"], true);
}

#[test]
fn malformed_input_exits_2() {
    let path = scratch("bad.json");
    write_fixture(&path, r#"{"dim": 3, "field": "rational", "brackets": [{"i": 2, "j": 1, "terms": []}]}"#);
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let missing = run(&["check", "/nonexistent/alg.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn decompose_reports_eigenspaces() {
    let path = scratch("heis_dec.json");
    write_fixture(&path, HEISENBERG3);
    let out = run(&["decompose", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let spaces = report["results"]["eigenspaces"].as_array().unwrap();
    assert_eq!(spaces.len(), 2);
    assert_eq!(spaces[0]["eigenvalue"], "-1/2");
    assert_eq!(spaces[0]["multiplicity"], 2);
    assert_eq!(spaces[1]["eigenvalue"], "1/2");
    assert_eq!(spaces[1]["multiplicity"], 1);
}

#[test]
fn reproduce_paper_example_passes_exactly() {
    let out = run(&[
        "reproduce",
        "paper-example",
        "--lambda",
        "0,1,3,7",
        "--mu",
        "1",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["pass"], true);
    let r = &report["results"];
    assert_eq!(r["jacobi_defect_zero"], true);
    assert_eq!(r["codazzi_defect_zero"], true);
    assert_eq!(r["nabla_norm_positive"], true);
    assert_eq!(r["no_eigenspace_is_ideal"], true);
    assert_eq!(r["killing_negative_definite"], true);
    // frozen exact value of ‖∇A‖² at this tuple
    assert_eq!(r["nabla_norm_sq"], "18744");

    // fractional tuples work too
    let out = run(&[
        "reproduce",
        "paper-example",
        "--lambda",
        "1/2,1,3,-7/3",
        "--mu",
        "2/5",
    ]);
    assert!(out.status.success());

    // coincident lambdas are rejected as malformed input
    let out = run(&[
        "reproduce",
        "paper-example",
        "--lambda",
        "1,1,3,7",
        "--mu",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_in_rational_mode() {
    let path = scratch("heis_repeat.json");
    write_fixture(&path, HEISENBERG3);
    let a = run(&["check", path.to_str().unwrap()]);
    let b = run(&["check", path.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn probe_emits_result_and_exit_zero_on_consistent_runs() {
    let path = scratch("su2_probe.json");
    write_fixture(&path, SU2_FLOAT);
    let out = run(&[
        "probe",
        path.to_str().unwrap(),
        "--restarts",
        "4",
        "--seed",
        "3",
        "--max-iter",
        "300",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["results"]["classification"], "harmonic_parallel");
    assert!(report["results"]["defect"].as_f64().unwrap() < 1e-9);
    assert_eq!(
        report["results"]["restarts"].as_array().unwrap().len(),
        4
    );
}

#[test]
fn catalog_list_and_build_round_trip() {
    let out = run(&["catalog", "list"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let names: Vec<&str> = report["results"]["names"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(names.contains(&"heisenberg3"));
    assert!(names.contains(&"su2_plus_su2"));

    let file = scratch("built_hyperbolic.json");
    let out = run(&[
        "catalog",
        "build",
        "hyperbolic_solvable",
        "--n",
        "4",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // the built file feeds straight back into check
    let out = run(&["check", file.to_str().unwrap()]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["results"]["harmonic"], true);
    assert_eq!(report["results"]["scalar_curvature"], -12.0);

    // stdout mode emits the algebra file itself
    let out = run(&["catalog", "build", "su2_biinvariant"]);
    assert!(out.status.success());
    let file: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(file["dim"], 3);
    assert_eq!(file["field"], "rational");

    let out = run(&["catalog", "build", "unknown_name"]);
    assert_eq!(out.status.code(), Some(2));
}
