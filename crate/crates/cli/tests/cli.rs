use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schrodinger")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn normal_forms() {
    assert_eq!(stdout(&["nf", "e*f"]).trim(), "f e + h");
    assert_eq!(stdout(&["nf", "p*q - q*p"]).trim(), "z");
    assert_eq!(stdout(&["nf", "-e*q^2"]).trim(), "-q^2 e - 2*q p - z");
}

#[test]
fn normal_form_round_trips() {
    for expr in ["e^2*f^2", "(h + 1/2)*p*q*e", "f*p^2 - e*q^2 - h*p*q", "3/4*z^2*e*f*q"] {
        let once = stdout(&["nf", expr]);
        assert_eq!(stdout(&["nf", once.trim()]), once, "{expr}");
    }
}

#[test]
fn casimir_and_center() {
    assert_eq!(stdout(&["casimir", "--verify"]).trim(), "central: true");
    assert!(stdout(&["casimir"]).contains("4*f z e"));
    let basis = json(&["center", "--degree", "3"]);
    assert_eq!(basis.as_array().unwrap().len(), 5);
    assert_eq!(stdout(&["hc", "z"]).trim(), "z");
}

#[test]
fn verma_outputs() {
    let ch = json(&["verma", "--hw", "1/3", "--charge", "1", "--depth", "6", "--character"]);
    assert_eq!(ch, serde_json::json!([1, 1, 2, 2, 3, 3, 4]));
    let simple = json(&["verma", "--hw", "1/3", "--charge", "0", "--depth", "4", "--simple"]);
    assert_eq!(simple, serde_json::json!([1, 0, 1, 0, 1]));
    let s = json(&["verma", "--hw", "-1/2", "--charge", "1", "--depth", "4", "--singular", "2"]);
    assert_eq!(s["vectors"].as_array().unwrap().len(), 1);
    assert_eq!(s["labels"], serde_json::json!(["q^2 v", "f v"]));
}

#[test]
fn block_outputs() {
    let dot = stdout(&["block", "--hw", "-1/2", "--charge", "1", "--dot"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("// relations:"));
    assert!(dot.contains("ab = 0"));
    let b = json(&["block", "--hw", "2", "--charge", "1"]);
    assert_eq!(b["block_type"], "NonzeroInteger");
    assert_eq!(b["dot_partner"]["h"], "-5");
    assert_eq!(b["primitive_ideal_count"], "1");
    let z = json(&["block", "--hw", "0", "--charge", "0"]);
    assert_eq!(z["primitive_ideal_count"], "unknown (zero charge)");
    assert_eq!(z["quiver"]["relations_unknown"], true);
}

#[test]
fn tables() {
    let ext = json(&["ext", "--hw", "1/3", "--charge", "0", "--depth", "8", "--range", "2"]);
    assert_eq!(ext["0,1"], 1);
    assert_eq!(ext["0,2"], 0);
    assert_eq!(ext.as_object().unwrap().len(), 9);
    let bgg = json(&["bgg", "--hw", "0", "--charge", "0", "--k", "2", "--depth", "8"]);
    assert_eq!(bgg["holds"], true);
    let f = json(&["findim", "--i", "2", "--depth", "3"]);
    assert_eq!(f["layers"][3]["dim"], 12);
    let w = json(&["weyl", "--charge", "2", "--a", "1/3", "--depth", "6"]);
    assert_eq!(w["character"], w["verma_character"]);
    assert_eq!(w["intertwiners"], 1);
    let a = json(&["ann", "--hw", "1", "--charge", "1", "--degree", "2", "--compare"]);
    assert_eq!(a["comparison"], "equal");
    assert_eq!(a["annihilator"]["dim"], a["central"]["dim"]);
    assert!(a["annihilator"]["basis"].as_array().unwrap().iter().all(Value::is_string));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nf", "e*"]).status.code(), Some(2));
    assert_eq!(run(&["verma", "--hw", "x", "--charge", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["hc", "e"]).status.code(), Some(1));
    assert_eq!(run(&["weyl", "--charge", "0", "--a", "1"]).status.code(), Some(1));
    assert_eq!(run(&["ann", "--hw", "1", "--charge", "1", "--degree", "9"]).status.code(), Some(1));
    assert_eq!(run(&["bgg", "--hw", "1", "--charge", "1", "--k", "1"]).status.code(), Some(1));
    assert_eq!(run(&["verma", "--hw", "1", "--charge", "1", "--depth", "3", "--singular", "7"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_errors() {
    let out = run(&["--json-errors", "hc", "e"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "not_weight_zero");
    let out = run(&["nf", "e^^2", "--json-errors"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "parse");
    let out = run(&["ext", "--hw", "q", "--charge", "0", "--json-errors"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "usage");
}

#[test]
fn deterministic() {
    let args = ["ann", "--hw", "1/3", "--charge", "0", "--degree", "2", "--compare"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["block", "--hw", "0", "--charge", "0", "--dot"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
