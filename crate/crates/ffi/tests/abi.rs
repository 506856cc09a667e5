use qclifford_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn render(m: *const QcMultivector) -> String {
    unsafe {
        let p = qc_mv_render(m);
        let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
        qc_string_free(p);
        s
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(qc_last_error()).to_string_lossy().into_owned() }
}

fn session(n: usize, point: Option<&str>) -> *mut QcSession {
    let point = point.map(c);
    let mut s = ptr::null_mut();
    let status = unsafe { qc_session_new(n, point.as_ref().map_or(ptr::null(), |p| p.as_ptr()), &mut s) };
    assert_eq!(status, QcStatus::Ok);
    s
}

fn eval(s: *const QcSession, expr: &str) -> *mut QcMultivector {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { qc_eval(s, c(expr).as_ptr(), &mut m) }, QcStatus::Ok, "{expr}");
    m
}

#[test]
fn products_match_the_evaluator() {
    let s = session(2, None);
    assert_eq!(unsafe { qc_session_dim(s) }, 4);
    let e1 = eval(s, "e1");
    let e34 = eval(s, "e3^e4");
    let e13 = eval(s, "e13");
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(qc_mv_contract(s, e1, e34, &mut out), QcStatus::Ok);
        assert_eq!(render(out), "q*e4");
        qc_mv_free(out);
        assert_eq!(qc_mv_reverse(s, e13, &mut out), QcStatus::Ok);
        assert_eq!(render(out), "(1-q)*1 - 1*e13");
        qc_mv_free(out);
        assert_eq!(qc_mv_wedge(s, e1, e1, &mut out), QcStatus::Ok);
        assert!(qc_mv_is_zero(out));
        qc_mv_free(out);

        // b1 b1 - ((1-q) b1 + q) through the ABI.
        let b1 = eval(s, "b1");
        assert_eq!(qc_mv_mul(s, b1, b1, &mut out), QcStatus::Ok);
        let rhs = eval(s, "(1-q)*b1 + q");
        assert_eq!(render(out), render(rhs));
        for m in [out, rhs, b1, e1, e34, e13] {
            qc_mv_free(m);
        }
        qc_session_free(s);
    }
}

#[test]
fn errors_carry_status_and_message() {
    let s = session(2, None);
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(qc_eval(s, c("e1 + * e2").as_ptr(), &mut m), QcStatus::Parse);
        assert!(last_error().contains("position 5"), "{}", last_error());
        assert_eq!(qc_eval(s, c("e5").as_ptr(), &mut m), QcStatus::Dimension);
        assert_eq!(qc_eval(ptr::null(), c("e1").as_ptr(), &mut m), QcStatus::NullPointer);
        assert!(m.is_null());
        qc_session_free(s);

        let mut t = ptr::null_mut();
        assert_eq!(qc_session_new(2, c("q=-1,l=1").as_ptr(), &mut t), QcStatus::Guard);
        assert!(last_error().contains("1+q=0"), "{}", last_error());
        assert!(t.is_null());
    }
}

#[test]
fn specialized_session_evaluates_numbers() {
    let s = session(2, Some("q=1,l=1"));
    let m = eval(s, "(e1+e3)*(e1+e3)");
    assert_eq!(render(m), "2*1");
    unsafe {
        qc_mv_free(m);
        qc_session_free(s);
    }
}

#[test]
fn verify_returns_json_report() {
    let mut json = ptr::null_mut();
    let mut code = -1;
    unsafe {
        let st = qc_verify(c("hecke").as_ptr(), 2, -1, ptr::null(), false, &mut json, &mut code);
        assert_eq!(st, QcStatus::Ok);
        assert_eq!(code, 0);
        let text = CStr::from_ptr(json).to_str().unwrap();
        let r = qclifford::report::Report::from_json(text).unwrap();
        assert_eq!(r.summary.fail, 0);
        qc_string_free(json);

        let st = qc_verify(c("hecke").as_ptr(), 2, 3, ptr::null(), false, &mut json, &mut code);
        assert_eq!(st, QcStatus::InvalidArgument);
        let st = qc_verify(c("young").as_ptr(), 3, -1, ptr::null(), false, &mut json, &mut code);
        assert_eq!(st, QcStatus::WrongN);
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(qc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/qclifford.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["qc_session_new", "qc_eval", "qc_mv_mul", "qc_verify", "qc_string_free", "QC_STATUS_GUARD"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(o) = std::process::Command::new("cc").args(["-fsyntax-only", "-x", "c", header]).output() else {
        return;
    };
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}
