use std::process::{Command, Output};

use serde_json::Value;

fn tate5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tate5")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("one JSON object")
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("JSON line")).collect()
}

fn re(v: &Value) -> f64 {
    v["re"].as_f64().unwrap()
}

#[test]
fn verify_field_report_schema() {
    let o = tate5(&["verify", "--suite", "field", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let reports = lines(&o);
    assert!(!reports.is_empty());
    for r in &reports {
        for key in ["suite", "id", "anchor", "status", "detail", "ms"] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
        assert_eq!(r["suite"], "field");
        assert_eq!(r["status"], "pass");
    }
    let mut ids: Vec<&str> = reports.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n, "check ids are unique");
    assert!(stderr(&o).contains("0 failed"));
}

#[test]
fn verify_output_is_independent_of_parallelism() {
    let one = tate5(&["verify", "--suite", "all", "--json", "--no-timing", "--jobs", "1"]);
    let many = tate5(&["verify", "--suite", "all", "--json", "--no-timing", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0), "{}", stdout(&one));
    assert_eq!(many.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn verify_suites_pass() {
    for suite in ["watson", "torsion"] {
        let o = tate5(&["verify", "--suite", suite, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
    let torsion = lines(&tate5(&["verify", "--suite", "torsion", "--json"]));
    assert!(torsion.iter().any(|r| r["id"].as_str().unwrap().contains("5P = O")));
    assert!(torsion.iter().any(|r| r["detail"].as_str().unwrap().starts_with("sign ")));
}

#[test]
fn verify_qseries_with_terms() {
    let o = tate5(&["verify", "--suite", "qseries", "--terms", "60", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(lines(&o).iter().any(|r| r["id"].as_str().unwrap().contains("(60 coefficients)")));
}

#[test]
fn zero_terms_skips_series() {
    let o = tate5(&["verify", "--suite", "qseries", "--terms", "0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let skipped: Vec<Value> = lines(&o).into_iter().filter(|r| r["status"] == "skipped").collect();
    assert_eq!(skipped.len(), 1);
    assert_eq!(skipped[0]["id"], "series");
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let o = tate5(&["verify", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown suite"));
}

#[test]
fn plain_text_report() {
    let o = tate5(&["verify", "--suite", "curve"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS curve/")));
}

#[test]
fn eval_at_i() {
    let o = tate5(&["eval", "0", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert!((re(&v["r_tau"]) - 0.2840790).abs() < 1e-7);
    assert!((re(&v["b"]) - 0.00185010).abs() < 1e-8);
    assert!(v["residuals"]["order5"].as_f64().unwrap() < 1e-9);
    assert!(v["residuals"]["curve_y1"].as_f64().unwrap() < 1e-9);
    for key in ["r_5tau", "u", "x", "y1", "y2", "x2p"] {
        assert!(v[key]["im"].is_number(), "{key}");
    }
}

#[test]
fn eval_generic_point() {
    let o = tate5(&["eval", "0.3333", "0.6667"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    for (k, r) in v["residuals"].as_object().unwrap() {
        assert!(r.as_f64().unwrap() < 1e-9, "{k} = {r}");
    }
}

#[test]
fn eval_rejects_lower_half_plane() {
    let o = tate5(&["eval", "0", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("upper half-plane"));
}

#[test]
fn exact_points_at_u_one() {
    let o = tate5(&["points", "u=1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["b"]["coords"], serde_json::json!(["-11/2", "0", "0", "0"]));
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts.len(), 20);
    assert_eq!(v["distinct"], 20);
    assert!(pts.iter().all(|p| p["on_curve"] == true && p["order5"] == true));
    assert_eq!(pts[0]["label"], "i=0,principal,Y1");
}

#[test]
fn exact_points_are_deterministic() {
    let a = tate5(&["points", "u=[0,1,0,0]", "--jobs", "1"]);
    let b = tate5(&["points", "u=[0,1,0,0]", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn pole_of_b_is_named() {
    let o = tate5(&["points", "u=-1"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("b(u)") && err.contains("(u - (-1))"), "{err}");
}

#[test]
fn singular_b_is_named() {
    // ε⁵ = −8 − 5ζ² − 5ζ³ is a root of b² + 11b − 1
    let o = tate5(&["points", "[-8,0,-5,-5]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("b^2 + 11b - 1"));
    let o = tate5(&["points", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("factor b "));
}

#[test]
fn numeric_points_from_b() {
    let o = tate5(&["points", "1/3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["points"].as_array().unwrap().len(), 20);
    assert_eq!(v["verified"], true);
}

#[test]
fn malformed_value_is_a_usage_error() {
    assert_eq!(tate5(&["points", "u=abc"]).status.code(), Some(2));
    assert_eq!(tate5(&["points", "[1,2]"]).status.code(), Some(2));
}
