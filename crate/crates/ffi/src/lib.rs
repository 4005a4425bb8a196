//! C ABI over `hesscsp`.
//!
//! Objects cross the boundary as opaque heap handles that the caller releases with the
//! matching `*_free` function. Fallible calls return an [`HcspStatus`] and write their result
//! through an out-pointer; on failure a description is available from [`hcsp_last_error`]
//! until the next failing call on the same thread. Panics never unwind into C: they are
//! reported as `HCSP_STATUS_PANIC`.
//!
//! Strings returned by this library are NUL-terminated UTF-8 and must be released with
//! [`hcsp_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hesscsp::{colouring_count, dimension, CspReport, Error, GeometryReport, ReverseHessenberg};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcspStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotWeaklyIncreasing = 4,
    OutOfRange = 5,
    Infeasible = 6,
    InvalidArgument = 7,
    Overflow = 8,
    Panic = 9,
}

/// Opaque handle to a validated reverse Hessenberg function.
pub struct HcspReverseHessenberg(ReverseHessenberg);

/// Opaque handle to a computed CSP together with its Schur expansion and verification report.
pub struct HcspCsp(CspReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn fail(status: HcspStatus, message: impl Into<String>) -> HcspStatus {
    set_last_error(message.into());
    status
}

fn status_of(e: &Error) -> HcspStatus {
    match e {
        Error::NotWeaklyIncreasing { .. } => HcspStatus::NotWeaklyIncreasing,
        Error::OutOfRange { .. } => HcspStatus::OutOfRange,
        Error::Infeasible { .. } => HcspStatus::Infeasible,
        Error::Parse(_) => HcspStatus::Parse,
        Error::SizeMismatch { .. } | Error::NotProper { .. } | Error::ColourOutOfRange { .. } => {
            HcspStatus::InvalidArgument
        }
    }
}

fn from_error(e: Error) -> HcspStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `body`, converting a panic into `HCSP_STATUS_PANIC`.
fn guarded(body: impl FnOnce() -> HcspStatus) -> HcspStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_owned());
            fail(HcspStatus::Panic, format!("panic: {detail}"))
        }
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> HcspStatus {
    if out.is_null() {
        return fail(HcspStatus::NullPointer, "output pointer is NULL");
    }
    out.write(value);
    HcspStatus::Ok
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn rh_ref<'a>(
    rh: *const HcspReverseHessenberg,
) -> Result<&'a ReverseHessenberg, HcspStatus> {
    rh.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(HcspStatus::NullPointer, "reverse Hessenberg handle is NULL"))
}

fn check_m(m: usize) -> Result<(), HcspStatus> {
    if m == 0 {
        return Err(fail(HcspStatus::InvalidArgument, "m must be at least 1"));
    }
    Ok(())
}

/// Static description of a status code. Never NULL; do not free.
#[no_mangle]
pub extern "C" fn hcsp_status_message(status: HcspStatus) -> *const c_char {
    let s: &'static CStr = match status {
        HcspStatus::Ok => c"ok",
        HcspStatus::NullPointer => c"null pointer argument",
        HcspStatus::InvalidUtf8 => c"string is not valid UTF-8",
        HcspStatus::Parse => c"could not parse input",
        HcspStatus::NotWeaklyIncreasing => c"r is not weakly increasing",
        HcspStatus::OutOfRange => c"r(i) outside 0..i-1",
        HcspStatus::Infeasible => c"no proper colouring with m colours",
        HcspStatus::InvalidArgument => c"invalid argument",
        HcspStatus::Overflow => c"result does not fit the output type",
        HcspStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

/// Message for the most recent failure on this thread, or NULL. Valid until the next failing
/// call on this thread; do not free.
#[no_mangle]
pub extern "C" fn hcsp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses the comma-separated form, e.g. `"0,0,1"`.
#[no_mangle]
pub unsafe extern "C" fn hcsp_rh_parse(
    text: *const c_char,
    out: *mut *mut HcspReverseHessenberg,
) -> HcspStatus {
    guarded(|| {
        if text.is_null() {
            return fail(HcspStatus::NullPointer, "text is NULL");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(HcspStatus::InvalidUtf8, "text is not valid UTF-8");
        };
        match text.parse::<ReverseHessenberg>() {
            Ok(r) => write_out(out, Box::into_raw(Box::new(HcspReverseHessenberg(r)))),
            Err(e) => from_error(e),
        }
    })
}

/// Validates `len` values `r(1), ..., r(len)`. `values` may be NULL when `len == 0`.
#[no_mangle]
pub unsafe extern "C" fn hcsp_rh_from_values(
    values: *const i64,
    len: usize,
    out: *mut *mut HcspReverseHessenberg,
) -> HcspStatus {
    guarded(|| {
        let values: &[i64] = if len == 0 {
            &[]
        } else if values.is_null() {
            return fail(HcspStatus::NullPointer, "values is NULL");
        } else {
            std::slice::from_raw_parts(values, len)
        };
        match ReverseHessenberg::validate(values) {
            Ok(r) => write_out(out, Box::into_raw(Box::new(HcspReverseHessenberg(r)))),
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub extern "C" fn hcsp_rh_staircase(n: usize) -> *mut HcspReverseHessenberg {
    Box::into_raw(Box::new(HcspReverseHessenberg(
        ReverseHessenberg::staircase(n),
    )))
}

#[no_mangle]
pub extern "C" fn hcsp_rh_complete(n: usize) -> *mut HcspReverseHessenberg {
    Box::into_raw(Box::new(HcspReverseHessenberg(
        ReverseHessenberg::complete(n),
    )))
}

/// Releases a handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn hcsp_rh_free(rh: *mut HcspReverseHessenberg) {
    if !rh.is_null() {
        drop(Box::from_raw(rh));
    }
}

/// `n`; 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn hcsp_rh_len(rh: *const HcspReverseHessenberg) -> usize {
    rh.as_ref().map_or(0, |h| h.0.len())
}

/// `r(i)` for `1 <= i <= n`.
#[no_mangle]
pub unsafe extern "C" fn hcsp_rh_value(
    rh: *const HcspReverseHessenberg,
    i: usize,
    out: *mut usize,
) -> HcspStatus {
    guarded(|| {
        let r = match rh_ref(rh) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if i == 0 || i > r.len() {
            return fail(
                HcspStatus::InvalidArgument,
                format!("position {i} outside 1..={}", r.len()),
            );
        }
        write_out(out, r.at(i))
    })
}

/// Number of edges `E_r`; 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn hcsp_rh_edge_count(rh: *const HcspReverseHessenberg) -> usize {
    rh.as_ref().map_or(0, |h| h.0.edge_count())
}

/// True iff the graph has a proper `m`-colouring. False for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn hcsp_rh_is_feasible(rh: *const HcspReverseHessenberg, m: usize) -> bool {
    rh.as_ref().is_some_and(|h| h.0.is_feasible(m))
}

/// Dimension `d_r = (m - 1) n - E_r` of the variety.
#[no_mangle]
pub unsafe extern "C" fn hcsp_dimension(
    rh: *const HcspReverseHessenberg,
    m: usize,
    out: *mut i64,
) -> HcspStatus {
    guarded(|| {
        let r = match rh_ref(rh) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if let Err(s) = check_m(m) {
            return s;
        }
        match dimension(r, m) {
            Ok(d) => write_out(out, d),
            Err(e) => from_error(e),
        }
    })
}

/// Number of proper `m`-colourings (0 when infeasible).
#[no_mangle]
pub unsafe extern "C" fn hcsp_colouring_count(
    rh: *const HcspReverseHessenberg,
    m: usize,
    out: *mut u64,
) -> HcspStatus {
    guarded(|| {
        let r = match rh_ref(rh) {
            Ok(r) => r,
            Err(s) => return s,
        };
        match u64::try_from(colouring_count(r, m)) {
            Ok(c) => write_out(out, c),
            Err(_) => fail(HcspStatus::Overflow, "colouring count exceeds 64 bits"),
        }
    })
}

/// Computes `CSP_r` with `m` colours, its Schur expansion and the verification report.
/// Infeasible input yields the zero polynomial, not an error.
#[no_mangle]
pub unsafe extern "C" fn hcsp_csp_compute(
    rh: *const HcspReverseHessenberg,
    m: usize,
    parallel: bool,
    out: *mut *mut HcspCsp,
) -> HcspStatus {
    guarded(|| {
        let r = match rh_ref(rh) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if let Err(s) = check_m(m) {
            return s;
        }
        if out.is_null() {
            return fail(HcspStatus::NullPointer, "output pointer is NULL");
        }
        let report = CspReport::build(r, m, parallel);
        write_out(out, Box::into_raw(Box::new(HcspCsp(report))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn hcsp_csp_free(csp: *mut HcspCsp) {
    if !csp.is_null() {
        drop(Box::from_raw(csp));
    }
}

/// True iff every Schur coefficient passed the nonnegativity, palindromicity and support
/// checks and the expansion reproduces the monomial data. False for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn hcsp_csp_verified(csp: *const HcspCsp) -> bool {
    csp.as_ref().is_some_and(|c| c.0.verification.pass)
}

/// Number of nonzero Schur coefficients.
#[no_mangle]
pub unsafe extern "C" fn hcsp_csp_schur_len(csp: *const HcspCsp) -> usize {
    csp.as_ref().map_or(0, |c| c.0.schur.len())
}

/// Number of dominant weights with a nonzero monomial coefficient.
#[no_mangle]
pub unsafe extern "C" fn hcsp_csp_monomial_len(csp: *const HcspCsp) -> usize {
    csp.as_ref().map_or(0, |c| c.0.monomial.len())
}

/// The JSON report `{n, m, r, E_r, d_r, monomial, schur, verification}`, compact form.
#[no_mangle]
pub unsafe extern "C" fn hcsp_csp_to_json(
    csp: *const HcspCsp,
    out: *mut *mut c_char,
) -> HcspStatus {
    guarded(|| {
        let Some(csp) = csp.as_ref() else {
            return fail(HcspStatus::NullPointer, "CSP handle is NULL");
        };
        let json = serde_json::to_string(&csp.0).expect("report serializes");
        write_out(out, into_c_string(json))
    })
}

/// The JSON geometry report `{d_r, fibre_dims, poincare_product, poincare_bb, agree,
/// identities_pass}`.
#[no_mangle]
pub unsafe extern "C" fn hcsp_poincare_json(
    rh: *const HcspReverseHessenberg,
    m: usize,
    parallel: bool,
    out: *mut *mut c_char,
) -> HcspStatus {
    guarded(|| {
        let r = match rh_ref(rh) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if let Err(s) = check_m(m) {
            return s;
        }
        if out.is_null() {
            return fail(HcspStatus::NullPointer, "output pointer is NULL");
        }
        match GeometryReport::build(r, m, parallel) {
            Ok(report) => {
                let json = serde_json::to_string(&report).expect("report serializes");
                write_out(out, into_c_string(json))
            }
            Err(e) => from_error(e),
        }
    })
}

/// Writes whether the bundle-product and cell-paving Poincaré polynomials coincide and all
/// related identities hold.
#[no_mangle]
pub unsafe extern "C" fn hcsp_poincare_check(
    rh: *const HcspReverseHessenberg,
    m: usize,
    out: *mut bool,
) -> HcspStatus {
    guarded(|| {
        let r = match rh_ref(rh) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if let Err(s) = check_m(m) {
            return s;
        }
        match GeometryReport::build(r, m, false) {
            Ok(report) => write_out(out, report.identities_pass),
            Err(e) => from_error(e),
        }
    })
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn hcsp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
