//! C ABI over the `hausdiv` core.
//!
//! Objects are opaque heap handles released with their `*_free` function.
//! Every fallible call returns an [`HdStatus`]; on failure the message is
//! available from [`hd_last_error_message`] until the next call on the same
//! thread. Strings returned by the library must be released with
//! [`hd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hausdiv::approx::{approximate_parametrize, ApproxRequest};
use hausdiv::arith::{parse_rational, Rational};
use hausdiv::cli::approx_json;
use hausdiv::divisor::EffectiveDivisor;
use hausdiv::linsys::{compute_system, LinearSystem, LinsysJson};
use hausdiv::numeric::{hausdorff_estimate, BoundingBox};
use hausdiv::param::{parametrize_by_lines, verify_parametrization, Pencil};
use hausdiv::poly::{parse_poly, MPoly};
use hausdiv::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    /// Any other mathematical precondition failure (see the message).
    Domain = 5,
    EmptySystem = 6,
    VerificationFailed = 7,
    Internal = 8,
    Panic = 9,
}

/// Pencil choice for [`hd_param_by_lines`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub enum HdPencil {
    Slope = 0,
    Intercept = 1,
    Auto = 2,
}

/// Polynomial over Q.
pub struct HdPoly(MPoly<Rational>);
/// Effective divisor.
pub struct HdDivisor(EffectiveDivisor);
/// Linear system H(n, D).
pub struct HdLinsys(LinearSystem);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HdStatus {
    match e {
        Error::Parse { .. } | Error::UnknownVariable(_) => HdStatus::Parse,
        Error::InvalidInput(_) => HdStatus::InvalidInput,
        Error::EmptySystem => HdStatus::EmptySystem,
        Error::VerificationFailed => HdStatus::VerificationFailed,
        Error::Internal(_) => HdStatus::Internal,
        _ => HdStatus::Domain,
    }
}

enum Fail {
    Null,
    Utf8,
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HdStatus::Ok,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument".into());
            HdStatus::NullPointer
        }
        Ok(Err(Fail::Utf8)) => {
            set_error("argument is not valid UTF-8".into());
            HdStatus::InvalidUtf8
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(format!("{}: {}", e.kind(), e));
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside the library".into());
            HdStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Utf8)
}

unsafe fn obj<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null)
}

fn rational(s: &str) -> Result<Rational, Fail> {
    parse_rational(s).ok_or_else(|| Fail::Core(Error::InvalidInput(format!("not a rational number: `{s}`"))))
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Owned by the
/// library; valid until the next call.
#[no_mangle]
pub extern "C" fn hd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, static string.
#[no_mangle]
pub extern "C" fn hd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a polynomial in x, y, z, t and parameters.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_poly_parse(src: *const c_char, out: *mut *mut HdPoly) -> HdStatus {
    guard(|| put(out, HdPoly(parse_poly(text(src)?)?)))
}

/// Canonical text form of a polynomial.
///
/// # Safety
/// `p` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_poly_to_string(p: *const HdPoly, out: *mut *mut c_char) -> HdStatus {
    guard(|| put_string(out, obj(p)?.0.to_string()))
}

/// Total degree, or -1 for the zero polynomial or a NULL handle.
///
/// # Safety
/// `p` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_poly_degree(p: *const HdPoly) -> i64 {
    p.as_ref().and_then(|h| h.0.total_degree()).map_or(-1, i64::from)
}

/// # Safety
/// `p` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_poly_free(p: *mut HdPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Reads a divisor from its JSON description.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_divisor_from_json(json: *const c_char, out: *mut *mut HdDivisor) -> HdStatus {
    guard(|| put(out, HdDivisor(EffectiveDivisor::from_json(text(json)?)?)))
}

/// # Safety
/// `d` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_divisor_to_json(d: *const HdDivisor, out: *mut *mut c_char) -> HdStatus {
    guard(|| put_string(out, obj(d)?.0.to_json()))
}

/// # Safety
/// `d` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_divisor_free(d: *mut HdDivisor) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Computes H(n, D).
///
/// # Safety
/// `d` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_linsys_compute(n: u32, d: *const HdDivisor, out: *mut *mut HdLinsys) -> HdStatus {
    guard(|| put(out, HdLinsys(compute_system(n, &obj(d)?.0)?)))
}

/// Projective dimension of the system, or -2 for a NULL handle.
///
/// # Safety
/// `l` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_linsys_dim(l: *const HdLinsys) -> i64 {
    l.as_ref().map_or(-2, |h| h.0.dim() as i64)
}

/// Copies the defining polynomial (with parameters lambda_k) into a new handle.
///
/// # Safety
/// `l` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_linsys_defining_poly(l: *const HdLinsys, out: *mut *mut HdPoly) -> HdStatus {
    guard(|| put(out, HdPoly(obj(l)?.0.defining_polynomial().clone())))
}

/// JSON description of the system.
///
/// # Safety
/// `l` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_linsys_to_json(l: *const HdLinsys, out: *mut *mut c_char) -> HdStatus {
    guard(|| {
        let j = serde_json::to_string(&LinsysJson::from(&obj(l)?.0)).expect("serializable");
        put_string(out, j)
    })
}

/// # Safety
/// `l` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_linsys_free(l: *mut HdLinsys) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Parametrizes a form of degree n with an (n-1)-fold point at (a:b:1).
/// `a` and `b` are rationals in text form. Writes JSON to `out`.
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn hd_param_by_lines(
    form: *const HdPoly,
    a: *const c_char,
    b: *const c_char,
    pencil: HdPencil,
    out: *mut *mut c_char,
) -> HdStatus {
    guard(|| {
        let f = &obj(form)?.0;
        let (a, b) = (rational(text(a)?)?, rational(text(b)?)?);
        let pencil = match pencil {
            HdPencil::Slope => Pencil::Slope,
            HdPencil::Intercept => Pencil::Intercept,
            HdPencil::Auto => Pencil::Auto,
        };
        let p = parametrize_by_lines(f, &a, &b, pencil)?;
        let j = serde_json::to_string(&p.to_json(verify_parametrization(f, &p))).expect("serializable");
        put_string(out, j)
    })
}

/// Full approximation pipeline with automatic choices. `point_a`/`point_b`
/// may both be NULL to pick the singular point automatically.
///
/// # Safety
/// Pointers must be valid or NULL as documented; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn hd_approximate(
    curve: *const HdPoly,
    point_a: *const c_char,
    point_b: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> HdStatus {
    guard(|| {
        let mut req = ApproxRequest::new(obj(curve)?.0.clone());
        if !point_a.is_null() || !point_b.is_null() {
            req.singular_point = Some((rational(text(point_a)?)?, rational(text(point_b)?)?));
        }
        req.seed = seed;
        let r = approximate_parametrize(&req)?;
        put_string(out, approx_json(&r).to_string())
    })
}

/// Sampled Hausdorff-distance estimate between two real curves in a box.
///
/// # Safety
/// Handles must be live; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_hausdorff_estimate(
    f: *const HdPoly,
    g: *const HdPoly,
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
    grid: usize,
    out: *mut f64,
) -> HdStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null);
        }
        let bbox = BoundingBox::new(xmin, xmax, ymin, ymax)?;
        *out = hausdorff_estimate(&obj(f)?.0, &obj(g)?.0, &bbox, grid)?.estimate;
        Ok(())
    })
}
