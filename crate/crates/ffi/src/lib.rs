//! C ABI for `g2split`.
//!
//! Values cross the boundary as NUL-terminated UTF-8 JSON. Every function
//! returns a [`G2Status`]; on failure the message is available from
//! [`g2_last_error`] until the next call on the same thread. Strings handed
//! out by this library are released with [`g2_string_free`], curves with
//! [`g2_curve_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use g2split::exact::{Nf, Polynomial};
use g2split::genus2::Genus2Curve;
use g2split::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G2Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Input = 3,
    Exact = 4,
    Genus2 = 5,
    Elliptic = 6,
    Ramification = 7,
    Vanishing = 8,
    Degenerate = 9,
    OffVariety = 10,
    Panic = 11,
}

impl From<&Error> for G2Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::Exact(_) => G2Status::Exact,
            Error::Genus2(_) => G2Status::Genus2,
            Error::Elliptic(_) => G2Status::Elliptic,
            Error::Ramification(_) => G2Status::Ramification,
            Error::Vanishing(_) => G2Status::Vanishing,
            Error::Degenerate(_) => G2Status::Degenerate,
            Error::OffVariety(_) => G2Status::OffVariety,
            Error::Input(_) => G2Status::Input,
        }
    }
}

/// A smooth or singular curve `Y^2 = f(x)` of degree 5 or 6.
pub struct G2Curve {
    inner: Genus2Curve<Nf>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: G2Status, msg: impl Into<String>) -> G2Status {
    set_error(msg.into());
    status
}

fn guard(f: impl FnOnce() -> G2Status) -> G2Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(G2Status::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, G2Status> {
    if s.is_null() {
        return Err(fail(G2Status::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(G2Status::InvalidUtf8, e.to_string()))
}

unsafe fn write_str(out: *mut *mut c_char, s: String) -> G2Status {
    if out.is_null() {
        return fail(G2Status::NullPointer, "null output pointer");
    }
    *out = CString::new(s).expect("JSON has no NUL").into_raw();
    G2Status::Ok
}

fn domain(e: Error) -> G2Status {
    let status = G2Status::from(&e);
    fail(status, e.to_string())
}

/// The message for the last failed call on this thread, or null. Owned by
/// the library; valid until the next call.
#[no_mangle]
pub extern "C" fn g2_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn g2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a curve from a JSON array of coefficients, low degree first.
/// Coefficients are integers, strings such as `"-3/4"`, or number-field
/// records `{"coeffs": [...], "min_poly": [...]}`.
///
/// # Safety
/// `coeffs_json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn g2_curve_new(coeffs_json: *const c_char, out: *mut *mut G2Curve) -> G2Status {
    guard(|| {
        if out.is_null() {
            return fail(G2Status::NullPointer, "null output pointer");
        }
        let s = match read_str(coeffs_json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let coeffs: Vec<Nf> = match serde_json::from_str(s) {
            Ok(c) => c,
            Err(e) => return fail(G2Status::Input, format!("curve: {e}")),
        };
        match Genus2Curve::new(Polynomial::new(coeffs)) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(G2Curve { inner }));
                G2Status::Ok
            }
            Err(e) => domain(e.into()),
        }
    })
}

/// # Safety
/// `curve` must come from [`g2_curve_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn g2_curve_free(curve: *mut G2Curve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

unsafe fn with_curve(
    curve: *const G2Curve,
    out: *mut *mut c_char,
    f: impl FnOnce(&Genus2Curve<Nf>) -> Result<serde_json::Value, Error>,
) -> G2Status {
    guard(|| {
        let Some(c) = curve.as_ref() else {
            return fail(G2Status::NullPointer, "null curve");
        };
        match f(&c.inner) {
            Ok(v) => write_str(out, v.to_string()),
            Err(e) => domain(e),
        }
    })
}

fn json(v: impl serde::Serialize) -> Result<serde_json::Value, Error> {
    serde_json::to_value(v).map_err(|e| Error::Input(e.to_string()))
}

/// `{"J2", "J4", "J6", "J10"}` as JSON.
///
/// # Safety
/// `curve` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn g2_curve_igusa(curve: *const G2Curve, out: *mut *mut c_char) -> G2Status {
    with_curve(curve, out, |c| json(c.igusa_invariants()?))
}

/// `{"i1", "i2", "i3"}` as JSON. Fails when `J2 = 0`.
///
/// # Safety
/// `curve` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn g2_curve_absolute(curve: *const G2Curve, out: *mut *mut c_char) -> G2Status {
    with_curve(curve, out, |c| json(c.absolute_invariants()?))
}

/// # Safety
/// `curve` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn g2_curve_is_smooth(curve: *const G2Curve, out: *mut bool) -> G2Status {
    guard(|| {
        let Some(c) = curve.as_ref() else {
            return fail(G2Status::NullPointer, "null curve");
        };
        if out.is_null() {
            return fail(G2Status::NullPointer, "null output pointer");
        }
        match c.inner.is_smooth() {
            Ok(b) => {
                *out = b;
                G2Status::Ok
            }
            Err(e) => domain(e.into()),
        }
    })
}

/// Runs a `g2` command. `argv_json` is a JSON array of arguments without the
/// program name, e.g. `["deg3", "pair", "--j", "0"]`. The command's JSON
/// document goes to `out` and its exit code to `exit_code`; the status is
/// `Ok` whenever the command ran, whatever its exit code.
///
/// # Safety
/// `argv_json` must be a valid C string; `out` and `exit_code` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn g2_run(
    argv_json: *const c_char,
    out: *mut *mut c_char,
    exit_code: *mut c_int,
) -> G2Status {
    guard(|| {
        if exit_code.is_null() {
            return fail(G2Status::NullPointer, "null exit code pointer");
        }
        let s = match read_str(argv_json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let args: Vec<String> = match serde_json::from_str(s) {
            Ok(a) => a,
            Err(e) => return fail(G2Status::Input, format!("argv: {e}")),
        };
        let (code, text) = g2split::cli::run(std::iter::once("g2".to_string()).chain(args));
        *exit_code = code;
        write_str(out, text)
    })
}
