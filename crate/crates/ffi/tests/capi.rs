use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::process::Command;
use std::ptr;

use matcanon_ffi::*;

fn parse(text: &str) -> *mut McMatrix {
    let c = CString::new(text).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { mc_matrix_parse(c.as_ptr(), &mut m) }, McStatus::Ok);
    m
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { mc_string_free(s) };
    out
}

fn last_error() -> String {
    let p = mc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn text(m: *const McMatrix) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { mc_matrix_to_text(m, &mut s) }, McStatus::Ok);
    take(s)
}

fn product(a: *const McMatrix, b: *const McMatrix) -> *mut McMatrix {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mc_matrix_multiply(a, b, &mut out) }, McStatus::Ok);
    out
}

fn equal(a: *const McMatrix, b: *const McMatrix) -> bool {
    let mut eq = false;
    assert_eq!(unsafe { mc_matrix_equal(a, b, &mut eq) }, McStatus::Ok);
    eq
}

const DIRSUM: &str = "ring Z\nrows 4\ncols 4\n1 2 0 0\n2 3 0 0\n0 0 3 4\n0 0 4 1\n";

#[test]
fn parse_inspect_and_print() {
    let m = parse(DIRSUM);
    unsafe {
        assert_eq!((mc_matrix_rows(m), mc_matrix_cols(m)), (4, 4));
        let mut ring = McRing::Q;
        assert_eq!(mc_matrix_ring(m, &mut ring), McStatus::Ok);
        assert_eq!(ring, McRing::Z);
        assert_eq!(mc_matrix_rows(ptr::null()), 0);
    }
    assert_eq!(text(m), DIRSUM);
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { mc_det(m, &mut d) }, McStatus::Ok);
    assert_eq!(take(d), "13");
    unsafe { mc_matrix_free(m) };
}

#[test]
fn hermite_and_smith_certificates() {
    let a = parse("ring Z\nrows 3\ncols 4\n0 4 6 2\n8 2 10 8\n2 0 4 4\n");
    let (mut q, mut h, mut rank) = (ptr::null_mut(), ptr::null_mut(), 0usize);
    assert_eq!(unsafe { mc_hermite(a, true, &mut q, &mut h, &mut rank) }, McStatus::Ok);
    assert_eq!(rank, 3);
    let qa = product(q, a);
    assert!(equal(qa, h));

    let (mut p, mut d, mut qq) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { mc_smith(a, &mut p, &mut d, &mut qq, &mut rank) }, McStatus::Ok);
    let pa = product(p, a);
    let paq = product(pa, qq);
    assert!(equal(paq, d));
    assert!(text(d).contains("2 0 0 0\n0 2 0 0\n0 0 18 0"));

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { mc_invariants_json(a, &mut json) }, McStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(v["det_divisors"], serde_json::json!(["1", "2", "4", "72"]));
    for m in [a, q, h, qa, p, d, qq, pa, paq] {
        unsafe { mc_matrix_free(m) };
    }
}

#[test]
fn similarity_calls() {
    let a = parse("ring Q\nrows 2\ncols 2\n1 1\n0 1\n");
    let b = parse("ring Q\nrows 2\ncols 2\n1 0\n5 1\n");
    let rot = parse("ring Q\nrows 2\ncols 2\n0 -1\n1 0\n");
    let (mut yes, mut s) = (false, ptr::null_mut());
    assert_eq!(unsafe { mc_similar(a, b, &mut yes, &mut s) }, McStatus::Ok);
    assert!(yes && !s.is_null());
    let (as_, sb) = (product(a, s), product(s, b));
    assert!(equal(as_, sb));

    let mut s2 = ptr::null_mut();
    assert_eq!(unsafe { mc_similar(a, rot, &mut yes, &mut s2) }, McStatus::Ok);
    assert!(!yes && s2.is_null());

    let (mut j, mut t) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { mc_jordan(b, &mut j, &mut t) }, McStatus::Ok);
    assert!(equal(j, a));
    let (mut f, mut u) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { mc_rcf(rot, &mut f, &mut u) }, McStatus::Ok);
    assert_eq!(text(f), "ring Q\nrows 2\ncols 2\n0 1\n-1 0\n");

    let mut poly = ptr::null_mut();
    assert_eq!(unsafe { mc_char_poly(rot, &mut poly) }, McStatus::Ok);
    assert_eq!(take(poly), "x^2+1");
    assert_eq!(unsafe { mc_min_poly(a, &mut poly) }, McStatus::Ok);
    assert_eq!(take(poly), "x^2-2*x+1");

    let (mut j2, mut t2) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { mc_jordan(rot, &mut j2, &mut t2) }, McStatus::Unsupported);
    assert!(last_error().contains("x^2+1"));
    assert!(j2.is_null() && t2.is_null());
    for m in [a, b, rot, s, as_, sb, j, t, f, u] {
        unsafe { mc_matrix_free(m) };
    }
}

#[test]
fn error_codes() {
    let mut m = ptr::null_mut();
    let bad = CString::new("ring Z\nrows 1\ncols 2\n1 x\n").unwrap();
    assert_eq!(unsafe { mc_matrix_parse(bad.as_ptr(), &mut m) }, McStatus::Parse);
    assert!(m.is_null());
    assert!(last_error().contains("line 4"));
    assert_eq!(unsafe { mc_matrix_parse(ptr::null(), &mut m) }, McStatus::NullArgument);

    let rect = parse("ring Z\nrows 1\ncols 2\n1 2\n");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { mc_det(rect, &mut s) }, McStatus::Shape);
    assert_eq!(unsafe { mc_det(rect, ptr::null_mut()) }, McStatus::Shape);
    let sq = parse("ring Z\nrows 1\ncols 1\n3\n");
    assert_eq!(unsafe { mc_det(sq, ptr::null_mut()) }, McStatus::NullArgument);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mc_matrix_multiply(sq, rect, &mut out) }, McStatus::Ok);
    assert_eq!(unsafe { mc_matrix_multiply(rect, sq, &mut out) }, McStatus::Shape);
    let q = parse("ring Q\nrows 1\ncols 1\n3\n");
    let mut eq = false;
    assert_eq!(unsafe { mc_matrix_equal(sq, q, &mut eq) }, McStatus::Ok);
    assert!(!eq);
    assert_eq!(unsafe { mc_det(sq, &mut s) }, McStatus::Ok);
    assert!(mc_last_error().is_null());
    unsafe {
        mc_string_free(s);
        for m in [rect, sq, q, out] {
            mc_matrix_free(m);
        }
        mc_matrix_free(ptr::null_mut());
        mc_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/matcanon.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "typedef struct McMatrix McMatrix",
        "MC_STATUS_OK = 0",
        "mc_matrix_parse",
        "mc_smith",
        "mc_similar",
        "mc_last_error",
        "mc_string_free",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    if let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-x", "c", "-std=c99", header]).output() {
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
