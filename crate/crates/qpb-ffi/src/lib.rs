//! C ABI for the verification library: opaque algebra handles, integer
//! error codes, and UTF-8 strings the caller frees with
//! [`qpb_string_free`].  Every entry point catches panics; details for the
//! last failure on the current thread come from [`qpb_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use qpb::expr;
use qpb::fredholm::FredholmModule;
use qpb::ncalg::catalog;
use qpb::ncalg::presentation::Presentation;
use qpb::suites::{run_suite, suite_names, RunConfig};

pub const QPB_OK: i32 = 0;
/// A required pointer argument was null.
pub const QPB_ERR_NULL_ARG: i32 = 1;
/// A string argument was not valid UTF-8.
pub const QPB_ERR_UTF8: i32 = 2;
/// The algebra or suite name is not bundled.
pub const QPB_ERR_UNKNOWN_NAME: i32 = 3;
/// An expression failed to parse.
pub const QPB_ERR_PARSE: i32 = 4;
/// The suite ran but at least one check failed.
pub const QPB_ERR_CHECK_FAILED: i32 = 5;
/// An internal invariant was violated (caught panic).
pub const QPB_ERR_PANIC: i32 = 6;
/// Any other library error.
pub const QPB_ERR_OTHER: i32 = 7;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn code_of(e: &qpb::Error) -> i32 {
    match e {
        qpb::Error::Parse(_) => QPB_ERR_PARSE,
        qpb::Error::UnknownAlgebra(_) | qpb::Error::UnknownGenerator(_) => QPB_ERR_UNKNOWN_NAME,
        _ => QPB_ERR_OTHER,
    }
}

/// Runs `f` behind a panic guard, translating panics into
/// [`QPB_ERR_PANIC`].
fn guarded(f: impl FnOnce() -> i32) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(&msg);
            QPB_ERR_PANIC
        }
    }
}

/// # Safety
/// `p` must be a valid pointer or null; null yields an error.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, i32> {
    if p.is_null() {
        set_error("null string argument");
        return Err(QPB_ERR_NULL_ARG);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        QPB_ERR_UTF8
    })
}

fn give_string(s: String, out: *mut *mut c_char) -> i32 {
    let c = match CString::new(s) {
        Ok(c) => c,
        Err(_) => {
            set_error("output contained an interior NUL byte");
            return QPB_ERR_OTHER;
        }
    };
    unsafe { *out = c.into_raw() };
    QPB_OK
}

/// Opaque handle to a bundled presented algebra.
pub struct QpbAlgebra(Arc<Presentation>);

/// Message for the most recent failure on this thread.  The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn qpb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by any `qpb_*` function.
///
/// # Safety
/// `s` must be a pointer previously returned by this library (or null).
#[no_mangle]
pub unsafe extern "C" fn qpb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opens a bundled algebra: `s1`..`s9`, `su2`, `u1`, `z2`, `rp2`, `zp:P`,
/// or `a2n:N`.  On success writes a handle the caller releases with
/// [`qpb_algebra_free`].
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qpb_algebra_new(id: *const c_char, out: *mut *mut QpbAlgebra) -> i32 {
    guarded(|| {
        if out.is_null() {
            set_error("null output argument");
            return QPB_ERR_NULL_ARG;
        }
        let id = match read_str(id) {
            Ok(s) => s,
            Err(code) => return code,
        };
        match catalog::bundled(id) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(QpbAlgebra(Arc::new(p))));
                QPB_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

/// # Safety
/// `a` must come from [`qpb_algebra_new`] (or be null).
#[no_mangle]
pub unsafe extern "C" fn qpb_algebra_free(a: *mut QpbAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Writes the algebra id as a fresh string.
///
/// # Safety
/// `a` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qpb_algebra_id(a: *const QpbAlgebra, out: *mut *mut c_char) -> i32 {
    guarded(|| {
        if a.is_null() || out.is_null() {
            set_error("null argument");
            return QPB_ERR_NULL_ARG;
        }
        let id = (&(*a).0).id.clone();
        give_string(id, out)
    })
}

/// Number of normal words of degree at most `degree`.
///
/// # Safety
/// `a` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qpb_algebra_basis_count(
    a: *const QpbAlgebra,
    degree: usize,
    out: *mut usize,
) -> i32 {
    guarded(|| {
        if a.is_null() || out.is_null() {
            set_error("null argument");
            return QPB_ERR_NULL_ARG;
        }
        let p = &(*a).0;
        *out = p.basis_enumerate(degree).len();
        QPB_OK
    })
}

/// Parses `expr` over the algebra's generators and writes its normal form
/// as a display string.
///
/// # Safety
/// `a` must be a live handle; `expr` must be NUL-terminated; `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qpb_algebra_normalize(
    a: *const QpbAlgebra,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        if a.is_null() || out.is_null() {
            set_error("null argument");
            return QPB_ERR_NULL_ARG;
        }
        let s = match read_str(expr) {
            Ok(s) => s,
            Err(code) => return code,
        };
        let p = &(*a).0;
        match expr::parse_poly(s, p) {
            Ok(poly) => give_string(p.fmt_poly(&p.normal_form(&poly)), out),
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

/// Runs a named verification suite (`hopf`, `comodule`, `connections`,
/// `cleft`, `prolong`, `smash`, `phi`, `mu`, `reps`, `fredholm`, `all`).
/// `cutoff == 0` selects each suite's default.  When `out_json` is
/// non-null it receives the full JSON report even if checks fail; the
/// return code is [`QPB_ERR_CHECK_FAILED`] in that case.
///
/// # Safety
/// `name` must be NUL-terminated; `out_json` may be null.
#[no_mangle]
pub unsafe extern "C" fn qpb_verify_suite(
    name: *const c_char,
    degree: usize,
    q: f64,
    phi: f64,
    cutoff: usize,
    margin: usize,
    seed: u64,
    out_json: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let name = match read_str(name) {
            Ok(s) => s,
            Err(code) => return code,
        };
        if !suite_names().contains(&name) {
            set_error(&format!("unknown suite `{name}`"));
            return QPB_ERR_UNKNOWN_NAME;
        }
        let cfg = RunConfig {
            degree,
            q,
            phi,
            cutoff: if cutoff == 0 { None } else { Some(cutoff) },
            margin,
            seed,
        };
        let report = match run_suite(name, &cfg) {
            Ok(r) => r,
            Err(e) => {
                set_error(&e.to_string());
                return code_of(&e);
            }
        };
        if !out_json.is_null() {
            let code = give_string(report.to_json(), out_json);
            if code != QPB_OK {
                return code;
            }
        }
        if report.passed() {
            QPB_OK
        } else {
            set_error("at least one check failed; see the JSON report");
            QPB_ERR_CHECK_FAILED
        }
    })
}

/// Graded-character trace of an expression over `a2n:n`, evaluated at the
/// given cutoff.  Writes the complex value and a rigorous bound on the
/// truncation error of its worst term.
///
/// # Safety
/// `monomial` must be NUL-terminated; the three out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qpb_trace(
    n: usize,
    cutoff: usize,
    q: f64,
    phi: f64,
    monomial: *const c_char,
    out_re: *mut f64,
    out_im: *mut f64,
    out_tail: *mut f64,
) -> i32 {
    guarded(|| {
        if out_re.is_null() || out_im.is_null() || out_tail.is_null() {
            set_error("null output argument");
            return QPB_ERR_NULL_ARG;
        }
        let s = match read_str(monomial) {
            Ok(s) => s,
            Err(code) => return code,
        };
        let p = match catalog::bundled(&format!("a2n:{n}")) {
            Ok(p) => p,
            Err(e) => {
                set_error(&e.to_string());
                return code_of(&e);
            }
        };
        let poly = match expr::parse_poly(s, &p) {
            Ok(poly) => p.normal_form(&poly),
            Err(e) => {
                set_error(&e.to_string());
                return code_of(&e);
            }
        };
        let fm = FredholmModule::new(n, cutoff, q, phi);
        let mut total_re = 0.0;
        let mut total_im = 0.0;
        let mut tail = 0.0f64;
        for (w, c) in poly.iter() {
            let tau = fm.tau_word(w);
            let coeff = c.eval(q);
            let v = tau * coeff;
            total_re += v.re;
            total_im += v.im;
            let (_, top) = fm.selection(w);
            tail += fm.tail_bound(top) * coeff.abs();
        }
        *out_re = total_re;
        *out_im = total_im;
        *out_tail = tail;
        QPB_OK
    })
}
