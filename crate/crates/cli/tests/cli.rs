use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltaring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn assert_error(out: &Output, code: i32, kind: &str) {
    assert_eq!(out.status.code(), Some(code), "{}", stderr(out));
    let err = stderr(out);
    assert_eq!(err.trim_end().lines().count(), 1, "{err}");
    assert!(err.starts_with(&format!("error[{kind}]: ")), "{err}");
}

#[test]
fn classify_t2() {
    let out = run(&["classify", "T(2, Z2)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["delta_quasipolar"], true);
    assert_eq!(v["abelian"], false);
    assert_eq!(v["uniquely_clean"], false);
    assert_eq!(v["size"], 8);
}

#[test]
fn strict_commuting_flag_keeps_other_predicates() {
    let loose = stdout_json(&run(&["classify", "Z4"]));
    let strict = stdout_json(&run(&["--strict-commuting", "classify", "Z4"]));
    assert_eq!(loose["uniquely_delta_clean"], strict["uniquely_delta_clean"]);
    let loose = stdout_json(&run(&["classify", "T(2, Z2)"]));
    let strict = stdout_json(&run(&["classify", "T(2, Z2)", "--strict-commuting"]));
    assert_eq!(loose["delta_quasipolar"], strict["delta_quasipolar"]);
}

#[test]
fn delta_and_describe() {
    let v = stdout_json(&run(&["delta", "Z8"]));
    assert_eq!(v["delta"], serde_json::json!([0, 2, 4, 6]));
    assert_eq!(v["equal"], true);
    let v = stdout_json(&run(&["describe", "T(2, Z2)"]));
    assert_eq!(v["elements"][6], "[[1,1],[0,0]]");
    assert_eq!(v["one"], 5);
    let md = run(&["describe", "prod(Z2, Z3)", "--format", "md"]);
    assert!(String::from_utf8_lossy(&md.stdout).contains("| 5 | (1, 2) |"));
}

#[test]
fn spectral_flavors() {
    let v = stdout_json(&run(&["spectral", "Z4", "--element", "1"]));
    assert_eq!(v["idempotents"], serde_json::json!([1]));
    let v = stdout_json(&run(&["spectral", "Z3", "--element", "1", "--flavor", "unit"]));
    assert_eq!(v["idempotents"], serde_json::json!([0, 1]));
    assert_error(&run(&["spectral", "Z4", "--element", "9"]), 2, "range");
}

#[test]
fn verify_subset_in_markdown() {
    let out = run(&["verify", "--check", "C15", "--check", "C22", "--format", "md", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("| C22 | `Z4` | VACUOUS | 2 ∉ U(R); 2 ∈ Δ(R) |"), "{text}");
    assert!(text.contains("0 fail"));
}

#[test]
fn verify_timing_is_opt_in() {
    let plain = String::from_utf8(run(&["verify", "--check", "C01"]).stdout).unwrap();
    assert!(!plain.contains("millis"));
    let timed = String::from_utf8(run(&["verify", "--check", "C01", "--timing"]).stdout).unwrap();
    assert!(timed.contains("millis"));
}

#[test]
fn manifests() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "# tiny\nZ2\nZ3 # field\n").unwrap();
    let v = stdout_json(&run(&["corpus", "--manifest", good.to_str().unwrap()]));
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[1]["line"], 3);

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let out = run(&["verify", "--manifest", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["results"], serde_json::json!([]));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "Z2\nT(2 Z2)\n").unwrap();
    let out = run(&["verify", "--manifest", bad.to_str().unwrap()]);
    assert_error(&out, 2, "parse");
    assert!(stderr(&out).contains("line 2"));

    let big = dir.path().join("big.txt");
    std::fs::write(&big, "M(3, Z4)\n").unwrap();
    assert_error(&run(&["verify", "--manifest", big.to_str().unwrap()]), 3, "capacity");

    let missing = dir.path().join("missing.txt");
    assert_error(&run(&["verify", "--manifest", missing.to_str().unwrap()]), 2, "io");
}

#[test]
fn error_exit_codes() {
    assert_error(&run(&["classify", "prod(Z2 Z3)"]), 2, "parse");
    assert_error(&run(&["classify", "M(3, Z4)"]), 3, "capacity");
    assert_error(&run(&["classify", "H(2, 1, Z4)"]), 2, "parameter");
    assert_error(&run(&["classify", "quot(Z4, 1)"]), 2, "ideal");
    assert_error(&run(&["verify", "--check", "C99"]), 2, "usage");
    assert_error(&run(&["frobnicate"]), 2, "usage");
    assert_error(&run(&["classify"]), 2, "usage");
    assert_error(&run(&["--jobs", "0", "classify", "Z2"]), 2, "usage");
}

#[test]
fn validate_reports_sampling_mode() {
    let v = stdout_json(&run(&["validate", "Z4"]));
    assert_eq!(v["report"]["sampling"]["mode"], "exhaustive");
    assert_eq!(v["report"]["violations"], serde_json::json!([]));
}

#[test]
fn capacity_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_deltaring"))
        .args(["classify", "Z64"])
        .env("DELTARING_CAPACITY", "32")
        .output()
        .unwrap();
    assert_error(&out, 3, "capacity");
}
