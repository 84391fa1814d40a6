//! C interface to `matcanon`.
//!
//! Matrices cross the boundary as opaque [`McMatrix`] handles. Every call
//! returns an [`McStatus`]; on failure [`mc_last_error`] describes what went
//! wrong. Strings returned through out-parameters are owned by the caller and
//! released with [`mc_string_free`]; handles with [`mc_matrix_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use matcanon::determinant::det;
use matcanon::hermite::{hermite_canonical, hermite_form};
use matcanon::invariants::invariant_report;
use matcanon::similarity::{char_poly, jordan, minimal_poly, rcf, similar};
use matcanon::smith::smith;
use matcanon::{Error, Matrix, Ring};
use serde_json::json;

/// Opaque matrix handle.
pub struct McMatrix(Matrix);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum McStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    RingMismatch = 4,
    Shape = 5,
    NotInvertible = 6,
    Unsupported = 7,
    FactorizationIncomplete = 8,
    Verification = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum McRing {
    Z = 0,
    Q = 1,
    Qx = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(McStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => McStatus::Parse,
            Error::RingMismatch(..) => McStatus::RingMismatch,
            Error::SizeMismatch(..)
            | Error::ShapeMismatch(_)
            | Error::NotSquare(..)
            | Error::IndexOutOfRange { .. }
            | Error::EmptyResult
            | Error::BadIndexSets(_) => McStatus::Shape,
            Error::SingularMatrix
            | Error::NotAUnit(_)
            | Error::DivisionByZero
            | Error::ZeroArgument
            | Error::ZeroArguments
            | Error::ZeroModulus => McStatus::NotInvertible,
            Error::FactorizationIncomplete(_) => McStatus::FactorizationIncomplete,
            Error::Verification(_) => McStatus::Verification,
            _ => McStatus::Unsupported,
        };
        Fail(status, e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> McStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            McStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            set_error(format!("panic: {msg}"));
            McStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(McStatus::NullArgument, format!("{what} is null"))
}

unsafe fn matrix<'a>(m: *const McMatrix, what: &str) -> Result<&'a Matrix, Fail> {
    m.as_ref().map(|m| &m.0).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, what: &str, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_matrix(out: *mut *mut McMatrix, what: &str, m: Matrix) -> Result<(), Fail> {
    put(out, what, Box::into_raw(Box::new(McMatrix(m))))
}

unsafe fn put_string(out: *mut *mut c_char, what: &str, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(McStatus::InvalidUtf8, "interior nul".into()))?;
    put(out, what, c.into_raw())
}

unsafe fn check_outs(outs: &[(*const (), &str)]) -> Result<(), Fail> {
    match outs.iter().find(|(p, _)| p.is_null()) {
        Some((_, what)) => Err(null(what)),
        None => Ok(()),
    }
}

/// Parses the text matrix format (`ring`, `rows`, `cols` header lines, then
/// one line per row).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_parse(text: *const c_char, out: *mut *mut McMatrix) -> McStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Fail(McStatus::InvalidUtf8, e.to_string()))?;
        put_matrix(out, "out", Matrix::parse(s)?)
    })
}

/// # Safety
/// `m` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_free(m: *mut McMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_rows(m: *const McMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Number of columns, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_cols(m: *const McMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_ring(m: *const McMatrix, out: *mut McRing) -> McStatus {
    guard(|| {
        let ring = match matrix(m, "m")?.ring() {
            Ring::Z => McRing::Z,
            Ring::Q => McRing::Q,
            Ring::QX => McRing::Qx,
        };
        put(out, "out", ring)
    })
}

/// Writes `m` in the text format accepted by [`mc_matrix_parse`].
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_to_text(m: *const McMatrix, out: *mut *mut c_char) -> McStatus {
    guard(|| put_string(out, "out", matrix(m, "m")?.to_text()))
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_multiply(
    a: *const McMatrix,
    b: *const McMatrix,
    out: *mut *mut McMatrix,
) -> McStatus {
    guard(|| {
        let p = matrix(a, "a")?.multiply(matrix(b, "b")?)?;
        put_matrix(out, "out", p)
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_equal(a: *const McMatrix, b: *const McMatrix, out: *mut bool) -> McStatus {
    guard(|| {
        let eq = matrix(a, "a")? == matrix(b, "b")?;
        put(out, "out", eq)
    })
}

/// Determinant as a string.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_det(m: *const McMatrix, out: *mut *mut c_char) -> McStatus {
    guard(|| put_string(out, "out", det(matrix(m, "m")?)?.to_string()))
}

/// Row Hermite form `Q*A = H`; `canonical` selects the unique normalized
/// form.
///
/// # Safety
/// `m` must be a live handle; `q_out`, `h_out` and `rank_out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mc_hermite(
    m: *const McMatrix,
    canonical: bool,
    q_out: *mut *mut McMatrix,
    h_out: *mut *mut McMatrix,
    rank_out: *mut usize,
) -> McStatus {
    guard(|| {
        let a = matrix(m, "m")?;
        check_outs(&[(q_out.cast(), "q_out"), (h_out.cast(), "h_out"), (rank_out.cast(), "rank_out")])?;
        let res = if canonical { hermite_canonical(a) } else { hermite_form(a) };
        put(rank_out, "rank_out", res.rank)?;
        put_matrix(q_out, "q_out", res.q)?;
        put_matrix(h_out, "h_out", res.h)
    })
}

/// Smith form `P*A*Q = D`.
///
/// # Safety
/// `m` must be a live handle; the out-parameters valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mc_smith(
    m: *const McMatrix,
    p_out: *mut *mut McMatrix,
    d_out: *mut *mut McMatrix,
    q_out: *mut *mut McMatrix,
    rank_out: *mut usize,
) -> McStatus {
    guard(|| {
        let a = matrix(m, "m")?;
        check_outs(&[
            (p_out.cast(), "p_out"),
            (d_out.cast(), "d_out"),
            (q_out.cast(), "q_out"),
            (rank_out.cast(), "rank_out"),
        ])?;
        let res = smith(a);
        put(rank_out, "rank_out", res.rank)?;
        put_matrix(p_out, "p_out", res.p)?;
        put_matrix(d_out, "d_out", res.d)?;
        put_matrix(q_out, "q_out", res.q)
    })
}

/// Rank, determinantal divisors, invariant factors and elementary divisors
/// as a JSON object.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_invariants_json(m: *const McMatrix, out: *mut *mut c_char) -> McStatus {
    guard(|| {
        let rep = invariant_report(matrix(m, "m")?)?;
        let strs = |v: &[matcanon::Elem]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let eds: Vec<_> = rep
            .elementary_divisors
            .iter()
            .map(|(p, e)| json!({ "prime": p.to_string(), "exponent": e }))
            .collect();
        let doc = json!({
            "rank": rep.rank,
            "det_divisors": strs(&rep.det_divisors),
            "invariant_factors": strs(&rep.invariant_factors),
            "elementary_divisors": eds,
        });
        put_string(out, "out", doc.to_string())
    })
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_char_poly(m: *const McMatrix, out: *mut *mut c_char) -> McStatus {
    guard(|| put_string(out, "out", char_poly(matrix(m, "m")?)?.to_string()))
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mc_min_poly(m: *const McMatrix, out: *mut *mut c_char) -> McStatus {
    guard(|| put_string(out, "out", minimal_poly(matrix(m, "m")?)?.to_string()))
}

type Form = fn(&Matrix) -> matcanon::Result<(matcanon::similarity::SimilarityCertificate, Matrix)>;

unsafe fn canonical_form(
    f: Form,
    m: *const McMatrix,
    form_out: *mut *mut McMatrix,
    s_out: *mut *mut McMatrix,
) -> McStatus {
    guard(|| {
        let a = matrix(m, "m")?;
        check_outs(&[(form_out.cast(), "form_out"), (s_out.cast(), "s_out")])?;
        let (cert, form) = f(a)?;
        put_matrix(form_out, "form_out", form)?;
        put_matrix(s_out, "s_out", cert.s)
    })
}

/// Rational canonical form `F` with `S^-1*A*S = F`.
///
/// # Safety
/// `m` must be a live handle; `form_out`, `s_out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mc_rcf(m: *const McMatrix, form_out: *mut *mut McMatrix, s_out: *mut *mut McMatrix) -> McStatus {
    canonical_form(rcf, m, form_out, s_out)
}

/// Jordan canonical form `J` with `S^-1*A*S = J`. Fails with
/// `MC_STATUS_UNSUPPORTED` when the characteristic polynomial does not split
/// over Q.
///
/// # Safety
/// `m` must be a live handle; `form_out`, `s_out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mc_jordan(
    m: *const McMatrix,
    form_out: *mut *mut McMatrix,
    s_out: *mut *mut McMatrix,
) -> McStatus {
    canonical_form(jordan, m, form_out, s_out)
}

/// Decides similarity. When similar and `s_out` is not null, stores a
/// conjugator `S` with `S^-1*A*S = B`; otherwise `*s_out` is set to null.
///
/// # Safety
/// `a`, `b` must be live handles, `similar_out` a valid pointer and `s_out`
/// null or valid.
#[no_mangle]
pub unsafe extern "C" fn mc_similar(
    a: *const McMatrix,
    b: *const McMatrix,
    similar_out: *mut bool,
    s_out: *mut *mut McMatrix,
) -> McStatus {
    guard(|| {
        let cert = similar(matrix(a, "a")?, matrix(b, "b")?)?;
        put(similar_out, "similar_out", cert.is_some())?;
        if !s_out.is_null() {
            match cert {
                Some(c) => put_matrix(s_out, "s_out", c.s)?,
                None => s_out.write(ptr::null_mut()),
            }
        }
        Ok(())
    })
}

/// Message for the most recent failed call on this thread, or null. The
/// pointer stays valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn mc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
