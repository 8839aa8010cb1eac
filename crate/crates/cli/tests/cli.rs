use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn ideals3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ideals3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(o)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

/// Tensor document from (i, j, k, value) entries, 1-based indices.
fn document(entries: &[(usize, usize, usize, &str)]) -> String {
    let mut w = vec![vec![vec!["0".to_string(); 3]; 3]; 3];
    for &(i, j, k, v) in entries {
        w[i - 1][j - 1][k - 1] = v.to_string();
    }
    serde_json::json!({ "field_mode": "real", "omega": w }).to_string()
}

/// e1e2 = e2e1 = 3e3, e2e3 = e3e2 = 2e1: its lines have irrational coordinates.
fn irrational_document() -> String {
    document(&[(1, 2, 3, "3"), (2, 1, 3, "3"), (2, 3, 1, "2"), (3, 2, 1, "2")])
}

#[test]
fn all_ones_has_a_plane_of_lines_and_no_coordinate_plane() {
    let o = ideals3(&["classify", "--family", "all-ones"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["one_dimensional"]["kind"], "infinite");
    assert!(r["one_dimensional"]["count"].is_null());
    assert_eq!(r["two_dimensional"]["type_i"], false);
    assert!(r["flags"].as_array().unwrap().iter().any(|f| f == "commutative"));
}

#[test]
fn rank_four_member_has_two_type_iv_points() {
    let o = ideals3(&["classify", "--family", "section7-rank4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let iv = &json(&o)["two_dimensional"]["type_iv"];
    assert_eq!(iv["kind"], "finite");
    let points: Vec<(String, String)> = iv["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["x"].as_str().unwrap().into(), p["y"].as_str().unwrap().into()))
        .collect();
    assert_eq!(points, vec![("0".into(), "1".into()), ("1".into(), "1".into())]);
}

#[test]
fn zero_product_is_flagged() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "zero.json", &document(&[]));
    let o = ideals3(&["classify", &path]);
    assert!(o.status.success());
    let flags = json(&o)["flags"].clone();
    assert!(flags.as_array().unwrap().iter().any(|f| f.as_str().unwrap().starts_with("zero product")));
}

#[test]
fn verify_exit_codes_follow_the_verdict() {
    let pass = ideals3(&["verify", "--family", "all-ones", "--line", "1", "1", "-2"]);
    assert_eq!(pass.status.code(), Some(0), "{}", stdout(&pass));
    assert!(stdout(&pass).starts_with("PASS"));

    let coord = ideals3(&["verify", "--family", "diagonal-i", "--plane", "I"]);
    assert_eq!(coord.status.code(), Some(0));

    let fail = ideals3(&["verify", "--family", "diagonal-i", "--plane", "IV,1,1"]);
    assert_eq!(fail.status.code(), Some(1));
    let text = stdout(&fail);
    assert!(text.starts_with("FAIL"));
    assert!(text.lines().count() > 1, "a failing verdict lists its nonzero quantities");

    let zero = ideals3(&["verify", "--family", "zero", "--plane", "IV 2 -3"]);
    assert_eq!(zero.status.code(), Some(0));
}

#[test]
fn verify_json_certificate() {
    let o = ideals3(&["verify", "--family", "diagonal-i", "--format", "json", "--plane", "IV,1,1"]);
    let v = json(&o);
    assert_eq!(v[0]["passed"], false);
    assert!(v[0]["certificate"].as_array().unwrap().iter().all(|c| c["value"] != "0"));
}

#[test]
fn malformed_input_exits_two_and_names_the_line() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "bad.json", "{\n  \"field_mode\": \"real\",\n  \"omega\": [1, \n}");
    let o = ideals3(&["classify", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3, column 13"), "{}", stderr(&o));

    let shape = write(dir.path(), "shape.json", r#"{"field_mode":"real","omega":[[["1"]]]}"#);
    assert_eq!(ideals3(&["classify", &shape]).status.code(), Some(2));

    let scalar = ideals3(&["verify", "--family", "zero", "--line", "1", "x", "0"]);
    assert_eq!(scalar.status.code(), Some(2));
}

#[test]
fn batch_manifest_keeps_entry_order() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "irr.json", &irrational_document());
    let manifest = write(
        dir.path(),
        "list.txt",
        "# three diagonal algebras, then a file\nfamily diagonal-i\nfamily diagonal-ii\n\nfamily diagonal-iii\nirr.json\n",
    );
    let o = ideals3(&["batch", &manifest, "--format", "json", "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = json(&o);
    assert_eq!(s["entries"], 4);
    assert_eq!(s["failed"], 0);
    let ones: Vec<Value> = s["rows"].as_array().unwrap().iter().map(|r| r["one_dimensional"].clone()).collect();
    assert_eq!(ones, vec![Value::from(3), Value::from(2), Value::from(1), Value::from(2)]);
}

#[test]
fn empty_manifest_is_fine() {
    let dir = TempDir::new().unwrap();
    let manifest = write(dir.path(), "empty.txt", "# nothing here\n");
    let o = ideals3(&["batch", &manifest]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 entries, 0 failed"));
}

#[test]
fn batch_reports_broken_entries_and_continues() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "a.json", &document(&[(3, 3, 3, "1")]));
    write(dir.path(), "b.json", "not json");
    let out = dir.path().join("reports");
    let o = ideals3(&["batch", dir.path().to_str().unwrap(), "--out-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("a.json") && text.contains("failed"), "{text}");
    assert!(text.contains("2 entries, 1 failed"));
    assert!(out.join("0000.report.json").exists());
    assert!(!out.join("0001.report.json").exists());
}

#[test]
fn report_round_trip_with_irrational_ideals() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "irr.json", &irrational_document());
    let report = dir.path().join("irr.report.json");
    let report = report.to_str().unwrap();

    let o = ideals3(&["classify", &input, "--check", "-o", report]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(report).unwrap();
    assert!(text.contains("\"modulus\""), "expected algebraic scalars in\n{text}");

    let v = ideals3(&["verify", &input, "--report", report]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    assert_eq!(stdout(&v).matches("PASS").count(), 3);

    // the same report does not describe a different algebra
    let w = ideals3(&["verify", "--family", "all-ones", "--report", report]);
    assert_eq!(w.status.code(), Some(1));
}

#[test]
fn family_documents_round_trip_through_classify() {
    let dir = TempDir::new().unwrap();
    let doc = ideals3(&["family", "section7", "1", "0", "2", "-1", "1", "1", "0", "3"]);
    assert!(doc.status.success(), "{}", stderr(&doc));
    let path = write(dir.path(), "s7.json", &stdout(&doc));
    let a = ideals3(&["classify", &path]);
    let b = ideals3(&["classify", "--family", "section7,1,0,2,-1,1,1,0,3"]);
    assert!(a.status.success() && b.status.success());
    let (mut a, mut b) = (json(&a), json(&b));
    a["input"] = Value::Null;
    b["input"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let manifest = write(dir.path(), "m.txt", "family dime1 1 0 1 2 0\nfamily section7-rank5\nfamily all-ones\n");
    let first = ideals3(&["batch", &manifest, "--format", "json"]);
    let second = ideals3(&["batch", &manifest, "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
    let c1 = ideals3(&["classify", "--family", "section7-rank3", "--quotient", "0"]);
    let c2 = ideals3(&["classify", "--family", "section7-rank3", "--quotient", "0"]);
    assert_eq!(c1.stdout, c2.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ideals3(&["classify"]).status.code(), Some(2));
    assert_eq!(ideals3(&["verify", "--family", "zero"]).status.code(), Some(2));
    assert_eq!(ideals3(&["family", "no-such-family"]).status.code(), Some(2));
}
