use qclifford::report::{Report, Status};
use std::process::{Command, Output};

fn qclifford(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qclifford"))
        .args(args)
        .env_remove("QCLIFFORD_REPORT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn has_float(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(n) => n.is_f64(),
        serde_json::Value::Array(a) => a.iter().any(has_float),
        serde_json::Value::Object(o) => o.values().any(has_float),
        _ => false,
    }
}

#[test]
fn eval_prints_canonical_forms() {
    for (expr, want) in [
        ("b1*b1", "q*1 + (1-q)*e13"),
        ("e1 _| (e3 ^ e4)", "q*e4"),
        ("~e13", "(1-q)*1 - 1*e13"),
        ("(e1+e3)*(e1+e3)", "(1+q)*1"),
    ] {
        let o = qclifford(&["eval", expr, "--n", "2"]);
        assert!(o.status.success(), "{expr}");
        assert_eq!(stdout(&o).trim(), want, "{expr}");
    }
}

#[test]
fn eval_reports_parse_position() {
    let o = qclifford(&["eval", "e1 + * e2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("parse error at 5"), "{err}");
}

#[test]
fn eval_dimension_errors() {
    let o = qclifford(&["eval", "e5", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qclifford(&["eval", "Ysym", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_hecke_passes() {
    let o = qclifford(&["verify", "hecke", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.summary.fail, 0);
    for id in ["hecke.quadratic.b1", "hecke.quadratic.b2", "hecke.braid.b1.b2"] {
        assert_eq!(r.check(id).unwrap().status, Status::Pass, "{id}");
    }
}

#[test]
fn verify_symmetrized_marks_braid_expected_fail() {
    let o = qclifford(&["verify", "hecke", "--n", "2", "--symmetrize-b", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    let braid = r.check("hecke.braid.b1.b2").unwrap();
    assert_eq!(braid.status, Status::ExpectedFail);
    assert!(braid.witness.as_deref().is_some_and(|w| !w.starts_with('0')));
    assert!(r.parameters.symmetrize_b);
}

#[test]
fn verify_young_at_q_one() {
    let o = qclifford(&["verify", "young", "--n", "2", "--at", "q=1,l=1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    let eig: Vec<String> = ["sym", "12|3", "13|2", "asym"]
        .iter()
        .map(|l| r.check(&format!("young.class-sum.eigenvalue.{l}")).unwrap().witness.clone().unwrap())
        .collect();
    assert_eq!(eig, ["3", "0", "0", "-3"]);
    assert_eq!(r.parameters.point.as_deref(), Some("q=1,l=1"));
}

#[test]
fn verify_records_guard_failure() {
    let o = qclifford(&["verify", "hecke", "--n", "2", "--at", "q=-1,l=1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let r = Report::from_json(&stdout(&o)).unwrap();
    let c = r.check("guard.point").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert_eq!(c.witness.as_deref(), Some("1+q=0"));
}

#[test]
fn verify_rejects_bad_n() {
    assert_eq!(qclifford(&["verify", "young", "--n", "3"]).status.code(), Some(2));
    assert_eq!(qclifford(&["verify", "hecke", "--n", "4"]).status.code(), Some(2));
    assert_eq!(qclifford(&["verify", "hecke", "--n", "2", "--eps", "2"]).status.code(), Some(2));
}

#[test]
fn verify_all_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("all.json");
    let o = qclifford(&["verify", "all", "--n", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.summary.fail, 0);
    assert_eq!(r.to_json(), text);
    assert!(!has_float(&serde_json::from_str(&text).unwrap()), "no floats");
    let diff = r.check("young.printed-13|2").unwrap();
    assert!(diff.witness.as_deref().unwrap().starts_with("printed - derived ="));

    let again = qclifford(&["report", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(stdout(&again), text);
    let txt = qclifford(&["report", path.to_str().unwrap()]);
    assert!(stdout(&txt).contains("0 failed"));
}

#[test]
fn report_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_qclifford"))
        .args(["verify", "hecke", "--n", "1"])
        .env("QCLIFFORD_REPORT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.path().join("hecke-n1.txt")).unwrap();
    assert!(text.starts_with("suite hecke (n=1"));
}

#[test]
fn eval_rejects_guard_points() {
    let o = qclifford(&["eval", "b1", "--n", "2", "--at", "q=0,l=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q=0"));
    let o = qclifford(&["eval", "b1", "--n", "2", "--at", "q=2,l=1"]);
    assert_eq!(stdout(&o).trim(), "1*e13");
}
