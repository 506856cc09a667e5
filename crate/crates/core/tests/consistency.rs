//! Specializing a passing symbolic suite at admissible points never fails.

use qclifford::report::Status;
use qclifford::suites::{self, random_points, Config, Target};
use qclifford::versor::Eps;

fn check_at_points(target: Target, seed: u64) {
    let symbolic = suites::run(&Config::new(target, 2)).unwrap();
    assert_eq!(symbolic.summary.fail, 0, "{}", symbolic.to_text());
    for point in random_points(20, seed) {
        let cfg = Config { point: Some(point.clone()), ..Config::new(target, 2) };
        let r = suites::run(&cfg).unwrap();
        let bad: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).collect();
        assert!(bad.is_empty(), "{target} at {point}: {bad:?}");
    }
}

#[test]
fn hecke_at_random_points() {
    check_at_points(Target::Hecke, 1);
}

#[test]
fn young_at_random_points() {
    check_at_points(Target::Young, 2);
}

#[test]
fn versor_at_random_points() {
    check_at_points(Target::Versor, 3);
}

#[test]
fn kernel_at_random_points() {
    check_at_points(Target::CliffordKernel, 4);
}

#[test]
fn versor_with_positive_eps() {
    let cfg = Config { eps: Eps::Plus, ..Config::new(Target::Versor, 2) };
    assert_eq!(suites::run(&cfg).unwrap().summary.fail, 0);
}

#[test]
fn hecke_n3_and_n1() {
    for n in [1, 3] {
        let r = suites::run(&Config::new(Target::Hecke, n)).unwrap();
        assert_eq!(r.summary.fail, 0, "{}", r.to_text());
    }
}

#[test]
fn guard_points_are_named() {
    for (pt, witness) in
        [("q=0,l=1", "q=0"), ("q=-1,l=1", "1+q=0"), ("q=root(q^2+q+1),l=1", "q^2+q+1=0"), ("q=2,l=0", "l=0")]
    {
        let point = qclifford::coeff::Point::parse(pt).unwrap();
        let cfg = Config { point: Some(point), ..Config::new(Target::Young, 2) };
        let r = suites::run(&cfg).unwrap();
        let c = r.check("guard.point").unwrap();
        assert_eq!(c.status, Status::Fail, "{pt}");
        assert_eq!(c.witness.as_deref(), Some(witness), "{pt}");
    }
}
