use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn vsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vsym")).args(args).output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn classical_symbol_report() {
    let out = vsym(&["symbol-classical", "--ring", "Z", "--a", "6,10,15", "--b", "1,1,-1"]);
    assert_eq!(code(&out), 0);
    let v = report(&out);
    assert_eq!(v["verdict"], "Verified");
    assert_eq!(v["result"]["pfaffian"], "1");
    assert_eq!(v["tool"]["name"], "vsym");
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn input_errors_exit_three() {
    assert_eq!(code(&vsym(&["symbol-classical", "--ring", "Z", "--a", "2,4,6"])), 3);
    assert_eq!(code(&vsym(&["symbol-classical", "--ring", "Z", "--a", "1,0,0", "--b", "0,1,0"])), 3);
    assert_eq!(code(&vsym(&["symbol-classical", "--ring", "Z/1x", "--a", "1,0,0"])), 3);
    assert_eq!(code(&vsym(&["orbit-enum", "--ring", "Z", "--n", "3"])), 3);
    assert_eq!(code(&vsym(&["no-such-verb"])), 3);
    let out = vsym(&["symbol-classical", "--ring", "Z", "--a", "1,0,0", "--output", "/nonexistent/dir/r.json"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn reports_are_deterministic_up_to_timing() {
    for args in [
        &["crosscheck-free", "--ring", "Z", "--a", "1,0,0"][..],
        &["orbit-enum", "--ring", "Z/4", "--n", "2"][..],
        &["witness-section", "--ring", "Z", "--a", "6,10,15", "--s=1,1,-1", "--t=-4,1,1"][..],
    ] {
        let a = without_timing(report(&vsym(args)));
        let b = without_timing(report(&vsym(args)));
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn orbit_enumeration_counts() {
    let v = report(&vsym(&["orbit-enum", "--ring", "GF(2)", "--n", "3", "--constancy"]));
    assert_eq!(v["result"]["um_count"], 7);
    assert_eq!(v["result"]["orbit_count"], 1);
    assert_eq!(v["verdict"], "Verified");
    let v = report(&vsym(&["orbit-enum", "--ring", "Z/4", "--n", "2"]));
    assert_eq!(v["result"]["um_count"], 12);
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn emitted_witnesses_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lemma.json");
    let out = vsym(&["lemma21", "--ring", "Z", "--n", "2", "--i", "1", "--j", "3", "--r", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(!out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["verdict"], "Verified");

    let out = vsym(&["witness-verify", "--witness", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let mut w = doc["result"]["witness"].clone();
    let mut bad = w.clone();
    bad["moves"].as_array_mut().unwrap().pop();
    let out = vsym(&["witness-verify", "--witness", &write(dir.path(), "bad.json", &bad)]);
    assert_eq!(code(&out), 1);
    assert_eq!(report(&out)["verdict"], "Falsified");

    w["mode"] = "V_GL".into();
    assert_eq!(code(&vsym(&["witness-verify", "--witness", &write(dir.path(), "gl.json", &w)])), 0);
    assert_eq!(code(&vsym(&["witness-verify", "--witness", "/nonexistent.json"])), 3);
}

#[test]
fn search_exhaustion_is_inconclusive() {
    let out = vsym(&["crosscheck-free", "--ring", "Z", "--a", "6,10,15", "--depth", "0"]);
    assert_eq!(code(&out), 2);
    assert_eq!(report(&out)["verdict"], "Inconclusive");
    let out = Command::new(env!("CARGO_BIN_EXE_vsym"))
        .args(["crosscheck-free", "--ring", "Z", "--a", "6,10,15"])
        .env("VSYM_SEARCH_DEPTH", "0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn action_with_a_swap_is_general() {
    let phi = r#"[["0","1","0"],["1","0","0"],["0","0","1"]]"#;
    let out = vsym(&["witness-action", "--ring", "Z", "--a", "1,0,0", "--phi", phi]);
    let v = report(&out);
    assert_eq!(code(&out), 0, "{v}");
    assert_eq!(v["result"]["class"], "general");
    assert_eq!(v["result"]["det"], "-1");
    assert_eq!(v["result"]["intertwines_form"], true);
    assert!(v["result"].get("witness").is_none());
}
