//! Exercises the C surface from Rust: handle lifecycle, error codes,
//! string ownership, and a small end-to-end suite run.

use std::ffi::{CStr, CString};
use std::ptr;

use qpb_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    qpb_string_free(p);
    s
}

#[test]
fn algebra_lifecycle_and_normalization() {
    unsafe {
        let mut a: *mut QpbAlgebra = ptr::null_mut();
        assert_eq!(qpb_algebra_new(cstr("s3").as_ptr(), &mut a), QPB_OK);
        assert!(!a.is_null());

        let mut id: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(qpb_algebra_id(a, &mut id), QPB_OK);
        assert_eq!(take_string(id), "s3");

        let mut nf: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            qpb_algebra_normalize(a, cstr("z1 z0").as_ptr(), &mut nf),
            QPB_OK
        );
        assert_eq!(take_string(nf), "q^-1 z0 z1");

        // 1 empty word, 4 letters, 9 normal pairs (16 minus 7 rule heads).
        let mut count = 0usize;
        assert_eq!(qpb_algebra_basis_count(a, 2, &mut count), QPB_OK);
        assert_eq!(count, 14);

        qpb_algebra_free(a);
    }
}

#[test]
fn error_paths_report_codes_and_messages() {
    unsafe {
        let mut a: *mut QpbAlgebra = ptr::null_mut();
        assert_eq!(
            qpb_algebra_new(cstr("nope").as_ptr(), &mut a),
            QPB_ERR_UNKNOWN_NAME
        );
        assert!(a.is_null());
        let msg = CStr::from_ptr(qpb_last_error()).to_string_lossy().into_owned();
        assert!(msg.contains("nope"), "unexpected message: {msg}");

        assert_eq!(qpb_algebra_new(ptr::null(), &mut a), QPB_ERR_NULL_ARG);

        assert_eq!(qpb_algebra_new(cstr("s2").as_ptr(), &mut a), QPB_OK);
        let mut nf: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            qpb_algebra_normalize(a, cstr("z9 +").as_ptr(), &mut nf),
            QPB_ERR_UNKNOWN_NAME
        );
        qpb_algebra_free(a);
    }
}

#[test]
fn suite_runs_through_the_c_surface() {
    unsafe {
        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        let code = qpb_verify_suite(
            cstr("connections").as_ptr(),
            1,
            0.5,
            0.3,
            6,
            4,
            17,
            &mut json,
        );
        assert_eq!(code, QPB_OK);
        let body = take_string(json);
        assert!(body.contains("\"overall\""), "missing overall: {body}");

        let bad = qpb_verify_suite(
            cstr("unknown-suite").as_ptr(),
            1,
            0.5,
            0.3,
            6,
            4,
            17,
            ptr::null_mut(),
        );
        assert_eq!(bad, QPB_ERR_UNKNOWN_NAME);
    }
}

#[test]
fn trace_matches_the_reference_value() {
    unsafe {
        let (mut re, mut im, mut tail) = (0.0f64, 0.0f64, 0.0f64);
        let code = qpb_trace(
            1,
            60,
            0.5,
            0.0,
            cstr("zeta1").as_ptr(),
            &mut re,
            &mut im,
            &mut tail,
        );
        assert_eq!(code, QPB_OK);
        assert!((re - 2.0).abs() < 1e-9, "re = {re}");
        assert!(im.abs() < 1e-12, "im = {im}");
        assert!(tail > 0.0 && tail < 1e-12, "tail = {tail}");
    }
}
