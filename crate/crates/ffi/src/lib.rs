//! C ABI for qclifford.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `_free` function. Every fallible call returns
//! a [`QcStatus`]; on failure [`qc_last_error`] describes what went wrong on
//! the calling thread. Strings returned to C are owned and released with
//! [`qc_string_free`].

use qclifford::coeff::Point;
use qclifford::exterior::Multivector;
use qclifford::hecke::HeckeContext;
use qclifford::session::Session;
use qclifford::suites::{self, Config, Target};
use qclifford::versor::Eps;
use qclifford::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Guard = 4,
    Dimension = 5,
    WrongN = 6,
    InvalidArgument = 7,
    Arithmetic = 8,
    Panic = 9,
}

/// A Hecke context for one `n`, symbolic or specialized at a point,
/// together with its named elements.
pub struct QcSession {
    inner: Session,
}

/// An element of the algebra of some session.
pub struct QcMultivector {
    inner: Multivector,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QcStatus {
    match e {
        Error::Parse { .. } => QcStatus::Parse,
        Error::Guard(_) => QcStatus::Guard,
        Error::DimensionMismatch { .. } | Error::IndexOutOfRange { .. } => QcStatus::Dimension,
        Error::WrongN { .. } => QcStatus::WrongN,
        Error::InvalidArgument(_) => QcStatus::InvalidArgument,
        Error::DivisionByZero | Error::NotRational(_) | Error::NotInSpan(_) | Error::NonScalar(_) => {
            QcStatus::Arithmetic
        }
    }
}

struct Failure(QcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Run `f`, translating errors and panics into a status.
fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> QcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QcStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            QcStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(QcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(QcStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, what).map(Some)
    }
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(QcStatus::NullPointer, format!("{what} is null")))
}

fn out_arg<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(QcStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn put_mv(out: *mut *mut QcMultivector, m: Multivector) {
    unsafe { *out = Box::into_raw(Box::new(QcMultivector { inner: m })) };
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Create a session for `n`. `point` is null for the symbolic context or
/// text such as `"q=2,l=1"`. Points where a denominator of the named
/// elements vanishes are rejected with [`QcStatus::Guard`].
///
/// # Safety
/// `point` is null or a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qc_session_new(n: usize, point: *const c_char, out: *mut *mut QcSession) -> QcStatus {
    guarded(|| {
        out_arg(out)?;
        let ctx = match opt_str_arg(point, "point")? {
            Some(p) => {
                let point = Point::parse(p)?;
                let scope = if n == 2 { Target::All } else { Target::Hecke };
                suites::check_point(scope, n, &point)?;
                HeckeContext::at(n, &point)?
            }
            None => HeckeContext::new(n)?,
        };
        *out = Box::into_raw(Box::new(QcSession { inner: Session::new(ctx) }));
        Ok(())
    })
}

/// # Safety
/// `s` is null or came from [`qc_session_new`] and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qc_session_free(s: *mut QcSession) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Dimension `2n` of the underlying vector space, or 0 for null.
///
/// # Safety
/// `s` is null or a live session.
#[no_mangle]
pub unsafe extern "C" fn qc_session_dim(s: *const QcSession) -> usize {
    s.as_ref().map_or(0, |s| s.inner.ctx().dim())
}

/// Evaluate an expression such as `"b1*b2 - ~e13"`. On a parse error the
/// message carries the byte position.
///
/// # Safety
/// `s` is a live session, `expr` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_eval(s: *const QcSession, expr: *const c_char, out: *mut *mut QcMultivector) -> QcStatus {
    guarded(|| {
        out_arg(out)?;
        let s = ref_arg(s, "session")?;
        let v = s.inner.eval(str_arg(expr, "expression")?)?;
        put_mv(out, v);
        Ok(())
    })
}

/// # Safety
/// `m` is null or came from this library and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qc_mv_free(m: *mut QcMultivector) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Canonical text of `m`; release with [`qc_string_free`]. Null on error.
///
/// # Safety
/// `m` is null or a live multivector.
#[no_mangle]
pub unsafe extern "C" fn qc_mv_render(m: *const QcMultivector) -> *mut c_char {
    match m.as_ref() {
        Some(m) => owned_string(m.inner.to_string()),
        None => {
            set_error("multivector is null".into());
            ptr::null_mut()
        }
    }
}

/// Nonzero when `m` is the zero element.
///
/// # Safety
/// `m` is null or a live multivector.
#[no_mangle]
pub unsafe extern "C" fn qc_mv_is_zero(m: *const QcMultivector) -> bool {
    m.as_ref().is_some_and(|m| m.inner.is_zero())
}

unsafe fn binary(
    s: *const QcSession,
    a: *const QcMultivector,
    b: *const QcMultivector,
    out: *mut *mut QcMultivector,
    op: impl FnOnce(&Session, &Multivector, &Multivector) -> qclifford::Result<Multivector>,
) -> QcStatus {
    guarded(|| {
        out_arg(out)?;
        let s = ref_arg(s, "session")?;
        let (a, b) = (ref_arg(a, "left operand")?, ref_arg(b, "right operand")?);
        put_mv(out, op(&s.inner, &a.inner, &b.inner)?);
        Ok(())
    })
}

/// Clifford product `a b`.
///
/// # Safety
/// All handles are live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qc_mv_mul(
    s: *const QcSession,
    a: *const QcMultivector,
    b: *const QcMultivector,
    out: *mut *mut QcMultivector,
) -> QcStatus {
    binary(s, a, b, out, |s, a, b| s.ctx().mul(a, b))
}

/// Exterior product `a ^ b`.
///
/// # Safety
/// All handles are live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qc_mv_wedge(
    s: *const QcSession,
    a: *const QcMultivector,
    b: *const QcMultivector,
    out: *mut *mut QcMultivector,
) -> QcStatus {
    binary(s, a, b, out, |_, a, b| a.wedge(b))
}

/// Left contraction `a _| b` with respect to the session's form.
///
/// # Safety
/// All handles are live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qc_mv_contract(
    s: *const QcSession,
    a: *const QcMultivector,
    b: *const QcMultivector,
    out: *mut *mut QcMultivector,
) -> QcStatus {
    binary(s, a, b, out, |s, a, b| s.ctx().alg().contract(a, b))
}

/// Reversion `~a`.
///
/// # Safety
/// All handles are live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qc_mv_reverse(
    s: *const QcSession,
    a: *const QcMultivector,
    out: *mut *mut QcMultivector,
) -> QcStatus {
    guarded(|| {
        out_arg(out)?;
        let s = ref_arg(s, "session")?;
        let a = ref_arg(a, "operand")?;
        put_mv(out, s.inner.ctx().alg().reversion(&a.inner)?);
        Ok(())
    })
}

/// Run a verification suite and hand back its JSON report.
///
/// `target` is one of `hecke`, `young`, `versor`, `clifford-kernel`, `all`;
/// `eps` is `1` or `-1`; `point` may be null. `exit_code` receives 0 when
/// no check failed and 1 otherwise.
///
/// # Safety
/// String arguments are NUL-terminated or null where allowed; `json_out`
/// and `exit_code` are writable.
#[no_mangle]
pub unsafe extern "C" fn qc_verify(
    target: *const c_char,
    n: usize,
    eps: i32,
    point: *const c_char,
    symmetrize_b: bool,
    json_out: *mut *mut c_char,
    exit_code: *mut i32,
) -> QcStatus {
    guarded(|| {
        out_arg(json_out)?;
        out_arg(exit_code)?;
        let target: Target = str_arg(target, "target")?.parse()?;
        let eps = match eps {
            1 => Eps::Plus,
            -1 => Eps::Minus,
            e => return Err(Error::InvalidArgument(format!("eps must be 1 or -1, got {e}")).into()),
        };
        let point = opt_str_arg(point, "point")?.map(Point::parse).transpose()?;
        let report = suites::run(&Config { target, n, eps, point, symmetrize_b })?;
        *exit_code = report.exit_code();
        *json_out = owned_string(report.to_json());
        Ok(())
    })
}

/// # Safety
/// `s` is null or a string returned by this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
