use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn charvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_out(args: &[&str]) -> Value {
    let out = charvar(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_of(out: &Output) -> Value {
    assert!(out.stdout.is_empty(), "no partial output on failure");
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"].clone()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn coeffs(v: &[&str]) -> String {
    format!("[{}]", v.iter().map(|s| format!("\"{s}\"")).collect::<Vec<_>>().join(","))
}

/// Matrix JSON from power-basis coefficient vectors.
fn matrix(e: [&[&str]; 4]) -> String {
    format!("[[{},{}],[{},{}]]", coeffs(e[0]), coeffs(e[1]), coeffs(e[2]), coeffs(e[3]))
}

fn rank(v: &Value, degree: &str) -> u64 {
    v["degrees"][degree]["rank"].as_u64().unwrap_or(0)
}

#[test]
fn family_brieskorn_235() {
    let v = json_out(&["family", "--family", "brieskorn:2,3,5"]);
    assert_eq!(v["lambdaP"], 2);
    assert_eq!(v["lambdaC"], 2);
    assert_eq!(rank(&v["HP"], "0"), 2);
    assert_eq!(rank(&v["HPsharp"], "-3"), 2);
    assert_eq!(v["HPsharp"]["degrees"]["-1"]["torsion"], serde_json::json!([2, 2]));
    assert_eq!(rank(&v["HPsharp"], "0"), 3);
    assert_eq!(v["HPsharp_cs"]["degrees"]["2"]["torsion"], serde_json::json!([2, 2]));
}

#[test]
fn family_lens_and_seifert() {
    let v = json_out(&["family", "--family", "lens:4,1"]);
    assert_eq!(rank(&v["HPsharp"], "-2"), 1);
    assert_eq!(rank(&v["HPsharp"], "0"), 3);
    let v = json_out(&["family", "--family", "seifert:2,3,5,7"]);
    assert_eq!(v["lambdaC"], 23);
    assert_eq!(v["lambdaP"], 59);
    assert!(v["HPsharp"]["refused"].is_string());
}

#[test]
fn family_connsum_refusal_and_flags() {
    let v = json_out(&["family", "--family", "connsum:2"]);
    assert!(v["HP"]["refused"].is_string());
    assert_eq!(v["lambdaP"], "unavailable");
    assert_eq!(v["discrepancies"][0]["field"], "HPsharp");
    let v = json_out(&["family", "--family", "connsum:1"]);
    assert_eq!(rank(&v["HPsharp"], "-3"), 1);
    assert_eq!(rank(&v["HPsharp"], "0"), 1);
    assert_eq!(v["discrepancies"], serde_json::json!([]));
}

#[test]
fn family_spec_errors_exit_2() {
    for spec in ["lens:4,2", "brieskorn:2,4,5", "klein:1", "seifert:2,3"] {
        let out = charvar(&["family", "--family", spec]);
        assert_eq!(out.status.code(), Some(2), "{spec}");
        assert_eq!(error_of(&out)["kind"], "input");
    }
}

#[test]
fn output_is_deterministic_across_runs_and_jobs() {
    for spec in ["seifert:2,3,5,7,11", "lens:13,5", "connsum:3"] {
        let a = charvar(&["family", "--family", spec, "--jobs", "1"]);
        let b = charvar(&["family", "--family", spec, "--jobs", "4"]);
        let c = charvar(&["family", "--family", spec]);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stdout, c.stdout);
    }
    let a = charvar(&["alpha-enum", "--family", "seifert:2,3,5,7", "--jobs", "1"]);
    let b = charvar(&["alpha-enum", "--family", "seifert:2,3,5,7", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn alpha_enum_counts() {
    let v = json_out(&["alpha-enum", "--family", "seifert:3,2,5,7"]);
    assert_eq!(v["exponents"], serde_json::json!([2, 3, 5, 7]));
    assert_eq!(v["m_counts"]["3"], 23);
    assert_eq!(v["m_counts"]["4"], 6);
    assert_eq!(v["tuples"].as_array().unwrap().len(), 3 * 2 * 3 * 4);
}

#[test]
fn milnor_commands() {
    let v = json_out(&["milnor", "--exponents", "3,3,3"]);
    assert_eq!(v["mu"], 8);
    assert_eq!(rank(&v["stalk"], "2"), 8);
    let v = json_out(&["milnor", "--clean", "3,0"]);
    assert_eq!(v["critical_locus"], "point");
    let out = charvar(&["milnor", "--exponents", "1,3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = charvar(&["milnor", "--clean", "2,5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cyclic_diagonal_report() {
    let dir = tempfile::tempdir().unwrap();
    let pres = write(dir.path(), "c5.txt", "gens: x\nrel: x^5\n");
    let zeta = ["0", "1", "0", "0"];
    let zeta_inv = ["-1", "-1", "-1", "-1"];
    let zero = ["0", "0", "0", "0"];
    let rep = write(
        dir.path(),
        "d.json",
        &format!(r#"{{"conductor": 5, "matrices": [{}]}}"#, matrix([&zeta, &zero, &zero, &zeta_inv])),
    );
    let v = json_out(&["rep-report", "--presentation", &pres, "--rep", &rep]);
    assert_eq!(v["classification"], "D_diagonal");
    assert_eq!(v["cocycles"]["dim_Z1"], 2);
    assert_eq!(v["cocycles"]["dim_B1"], 2);
    assert_eq!(v["cocycles"]["dim_H1"], 0);
    assert_eq!(v["jacobian_check"]["status"], "pass");

    let batch = json_out(&["rep-report", "--presentation", &pres, "--rep", &rep, "--rep", &rep, "--jobs", "2"]);
    assert_eq!(batch.as_array().unwrap().len(), 2);
    assert_eq!(batch[1]["result"], v);
}

#[test]
fn three_torus_and_free_group_reports() {
    let dir = tempfile::tempdir().unwrap();
    let id: [&[&str]; 4] = [&["1"], &["0"], &["0"], &["1"]];
    let rep = write(
        dir.path(),
        "t3.json",
        &format!(
            r#"{{"presentation": "gens: a b c\nrel: abAB\nrel: acAC\nrel: bcBC", "conductor": 1, "matrices": [{m},{m},{m}]}}"#,
            m = matrix(id)
        ),
    );
    let v = json_out(&["rep-report", "--rep", &rep]);
    assert_eq!(v["classification"], "E_central");
    assert_eq!(v["cocycles"]["dim_Z1"], 9);

    let a = matrix([&["0", "1"], &["0", "0"], &["0", "0"], &["0", "-1"]]);
    let b = matrix([&["0", "0"], &["1", "0"], &["-1", "0"], &["0", "0"]]);
    let rep = write(
        dir.path(),
        "f2.json",
        &format!(r#"{{"presentation": "gens: a b", "conductor": 4, "matrices": [{a},{b}]}}"#),
    );
    let v = json_out(&["rep-report", "--rep", &rep]);
    assert_eq!(v["classification"], "A_irreducible");
    assert_eq!(v["cocycles"]["dim_Z1"], 6);
    assert_eq!(v["cocycles"]["dim_H1"], 3);

    let tr = json_out(&["traces", "--rep", &rep]);
    let words: Vec<&str> = tr.as_array().unwrap().iter().map(|e| e["word"].as_str().unwrap()).collect();
    assert_eq!(words, ["a", "b", "a*b"]);
    assert!(tr.as_array().unwrap().iter().all(|e| e["value"] == "0"));

    let torus = write(dir.path(), "torus.txt", "gens: a b\nrel: abAB\n");
    let out = charvar(&["rep-report", "--presentation", &torus, "--rep", &rep]);
    assert_eq!(out.status.code(), Some(3));
    let err = error_of(&out);
    assert_eq!(err["kind"], "invalid_representation");
    assert!(err["message"].as_str().unwrap().contains("abAB"));
}

#[test]
fn input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let pres = write(dir.path(), "bad.txt", "gens: a\nrel: aq\n");
    let out = charvar(&["poly-system", "--presentation", &pres]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_of(&out)["kind"], "input");

    let out = charvar(&["poly-system", "--presentation", "/nonexistent/file"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_of(&out)["kind"], "io");

    let rep = write(dir.path(), "r.json", "{not json");
    let out = charvar(&["rep-report", "--rep", &rep]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn poly_system_lists_equations() {
    let dir = tempfile::tempdir().unwrap();
    let pres = write(dir.path(), "z2.txt", "gens: a b\nrel: abAB\n");
    let v = json_out(&["poly-system", "--presentation", &pres]);
    assert_eq!(v["variables"].as_array().unwrap().len(), 8);
    assert_eq!(v["equations"].as_array().unwrap().len(), 6);
    assert_eq!(v["equations"][5]["origin"]["kind"], "determinant");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o.json");
    let out = charvar(&["family", "--family", "S3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rank(&v["HPsharp"], "0"), 1);

    let missing = dir.path().join("never.json");
    let out = charvar(&["family", "--family", "lens:4,2", "--out", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!missing.exists());
}

#[test]
fn self_check_passes_and_detects_corruption() {
    let a = charvar(&["self-check"]);
    assert_eq!(a.status.code(), Some(0));
    let text = String::from_utf8(a.stdout.clone()).unwrap();
    assert!(text.contains("13/13 checks passed"));
    let b = charvar(&["self-check"]);
    assert_eq!(a.stdout, b.stdout);

    let c = charvar(&["self-check", "--corrupt-catalog", "PSL2C"]);
    assert_eq!(c.status.code(), Some(1));
    let text = String::from_utf8(c.stdout).unwrap();
    assert!(text.lines().any(|l| l.contains("FAIL") && l.contains("duality")));
}
