use std::path::Path;
use std::process::{Command, Output};

fn qperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qperm")).args(args).env_remove("QPERM_REPORT_DIR").output().unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_hopf_exits_zero() {
    let out = qperm(&["verify-hopf", "--n", "3", "--cap", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: verified"));
}

#[test]
fn wang_reports_filtration() {
    let out = qperm(&["wang", "--n", "4", "--depth", "10", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let f: Vec<u64> = serde_json::from_value(v["reports"][0]["data"]["filtration"].clone()).unwrap();
    assert_eq!(f, (0..=10).map(|d| 2 * d + 1).collect::<Vec<_>>());
    assert_eq!(v["verdict"], "verified");
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn broken_grading_is_refuted_with_witness() {
    let out = qperm(&["verify-grading", "--input", &data("broken.grading"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let w = &json(&out)["reports"][0]["data"]["witness"];
    assert_eq!((w["g"].as_str(), w["h"].as_str(), w["gh"].as_str()), (Some("(1)"), Some("(1)"), Some("(2)")));
}

#[test]
fn truncated_completion_is_inconclusive() {
    let out = qperm(&["complete", "--input", &data("braid.pres"), "--cap", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        vec!["frobnicate"],
        vec!["wang", "--n", "4", "--bogus"],
        vec!["classify", "--n", "13"],
        vec!["lemma36", "--n", "3", "--families", "row-orth,diagonal,col-sum"],
        vec!["grade", "--blocks", "2,3", "--groups", "Z2,Z3"],
        vec!["wang", "--n", "3"],
        vec!["orbit-decompose", "--input", "/nonexistent/file.grading"],
    ] {
        let out = qperm(&args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(qperm(&["--help"]).status.code(), Some(0));
}

#[test]
fn aliases_and_descriptive_names_agree() {
    let a = qperm(&["lemma37", "--n", "3", "--no-timing", "--format", "json"]);
    let b = qperm(&["column-sums", "--n", "3", "--no-timing", "--format", "json"]);
    assert_eq!(json(&a)["reports"], json(&b)["reports"]);
}

#[test]
fn report_directory_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_qperm"))
        .args(["classify", "--n", "5", "--no-timing"])
        .env("QPERM_REPORT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let written: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("classify-n5.json")).unwrap()).unwrap();
    assert_eq!(written["reports"][0]["kind"], "classification");
    assert_eq!(written["reports"][0]["general"].as_array().unwrap().len(), 8);
    assert!(written["wall_time_ms"].is_null());

    let file = dir.path().join("grade.json");
    let emitted = dir.path().join("g.grading");
    let out = qperm(&["grade", "--blocks", "3,2", "--groups", "Z3,Z2", "--out", file.to_str().unwrap(), "--emit", emitted.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&file).unwrap()).unwrap();
    assert_eq!(v["reports"][1]["partition"], serde_json::json!([3, 2]));
    let back = qperm(&["orbit-decompose", "--input", emitted.to_str().unwrap(), "--format", "json"]);
    assert_eq!(json(&back)["reports"][1]["k"], 2);
}

#[test]
fn pi_n_polynomial_file() {
    let out = qperm(&["pi-n", "--n", "4", "--poly", &data("kernel.poly"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let images = &json(&out)["reports"][0]["data"]["images"];
    assert_eq!(images[0]["zero"], true);
    assert_eq!(images[1]["support"], serde_json::json!(["(1 2): 1", "(1 2)(3 4): 1"]));
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = quantum_permutations::cli::run(["qperm", "iso-check", "--n", "3", "--no-timing", "--format", "json"], &mut out, &mut err);
    assert_eq!(code, 0);
    let bin = qperm(&["iso-check", "--n", "3", "--no-timing", "--format", "json"]);
    assert_eq!(out, bin.stdout);
}
