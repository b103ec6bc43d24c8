use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use phm::bundle::{to_json, Bundle};
use phm_core::fixtures::fixture;
use serde_json::{json, Value};

fn phm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phm"))
        .args(args)
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

fn fixture_json(name: &str) -> Value {
    serde_json::from_str(&to_json(&Bundle::from(fixture(name).unwrap()))).unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_f1_passes() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "f1.json", &fixture_json("F1"));
    let out = phm(&["validate", arg(&p)]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let lines = text(&out.stdout);
    assert!(lines
        .lines()
        .all(|l| serde_json::from_str::<Value>(l).is_ok()));
    assert!(lines.contains(r#""law":"expected.iso.holds","indices":[],"status":"pass""#));
}

#[test]
fn broken_antipode_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    let out = phm(&["fixtures", "export", "F1-bad-antipode", "-o", arg(&p)]);
    assert_eq!(out.status.code(), Some(0));
    let out = phm(&["validate", arg(&p)]);
    assert_eq!(out.status.code(), Some(1));
    let first = text(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .find(|v| v["status"] == "fail")
        .unwrap();
    assert_eq!(first["law"], "H.hopf.antipode_left");
    assert_eq!(first["witness"]["basis"], json!([1]));
}

#[test]
fn fundamental_on_f2_reports_hypotheses_and_iso() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "f2.json", &fixture_json("F2"));
    let out = phm(&["fundamental", arg(&p)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stderr).contains("hypotheses: not satisfied; isomorphism: verified"));
    let last: Value = serde_json::from_str(text(&out.stdout).lines().last().unwrap()).unwrap();
    assert_eq!(last["hypotheses"], "not satisfied");
    assert_eq!(last["isomorphism"], "verified");
    assert_eq!(last["inverse_source"], "exact_inversion");
}

#[test]
fn malformed_rational_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = fixture_json("F1");
    v["H"]["counit"]["entries"][0][2] = json!("1/0");
    let p = write(dir.path(), "bad.json", &v);
    let out = phm(&["validate", arg(&p)]);
    assert_eq!(out.status.code(), Some(3));
    let err = text(&out.stderr);
    assert!(
        err.contains("malformed rational \"1/0\" at H.counit.entries[0]"),
        "{err}"
    );
}

#[test]
fn missing_antipode_names_the_block() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = fixture_json("F1");
    v["H"].as_object_mut().unwrap().remove("antipode");
    let p = write(dir.path(), "bad.json", &v);
    let out = phm(&["validate", arg(&p)]);
    assert_eq!(out.status.code(), Some(3));
    let err = text(&out.stderr);
    assert!(
        err.contains("schema violation at H") && err.contains("`antipode`"),
        "{err}"
    );
}

#[test]
fn out_of_range_index_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = fixture_json("F1");
    v["M"]["action"][1]["entries"][0][1] = json!(99);
    let p = write(dir.path(), "bad.json", &v);
    let out = phm(&["validate", arg(&p)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(text(&out.stderr).contains("index out of range at M.action[1].entries[0]"));
}

#[test]
fn wrong_shape_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = fixture_json("F1");
    v["A"]["bracket"][0]["cols"] = json!(3);
    let p = write(dir.path(), "bad.json", &v);
    let out = phm(&["validate", arg(&p)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(text(&out.stderr).contains("A.bracket[0]"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(phm(&[]).status.code(), Some(2));
    assert_eq!(phm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(phm(&["fixtures", "export", "F9"]).status.code(), Some(2));
    assert_eq!(phm(&["--help"]).status.code(), Some(0));
}

#[test]
fn missing_file_is_a_parse_error() {
    assert_eq!(
        phm(&["validate", "/nonexistent/bundle.json"]).status.code(),
        Some(3)
    );
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "f4.json", &fixture_json("F4"));
    for cmd in ["validate", "coinvariants", "fundamental", "lemmas"] {
        let a = phm(&[cmd, arg(&p)]);
        let b = phm(&[cmd, arg(&p)]);
        assert_eq!(a.status.code(), Some(0), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn fixtures_list_names_everything() {
    let out = text(&phm(&["fixtures", "list"]).stdout);
    for name in ["F1", "F2", "F3", "F4", "F1-zero-counit"] {
        assert!(out.lines().any(|l| l == name), "{name}");
    }
}

#[test]
fn lemmas_on_an_invalid_bundle_stop_at_validation() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    phm(&["fixtures", "export", "F1-bad-coaction", "-o", arg(&p)]);
    let out = phm(&["lemmas", arg(&p)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stdout).contains("M.comodule.coassociativity"));
}
