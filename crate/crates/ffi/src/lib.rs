//! C interface to the rgamma analysis.
//!
//! Every fallible function returns an [`RgStatus`]; on failure a message is
//! available from [`rg_last_error_message`] on the same thread. Strings handed
//! out by the library must be released with [`rg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rgamma::oracle::verify_point;
use rgamma::parse::parse_point;
use rgamma::report::Analysis;
use rgamma::{Error, NumericalSemigroup};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    DomainError = 3,
    IndexOutOfRange = 4,
    OracleDisagreement = 5,
    Panic = 6,
}

/// Opaque analysis of one numerical semigroup.
pub struct RgAnalysis {
    inner: Analysis,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

fn status_of(e: &Error) -> RgStatus {
    match e {
        Error::Parse(_) | Error::UnknownVariable(_) | Error::EmptyInput => RgStatus::InvalidInput,
        _ => RgStatus::DomainError,
    }
}

fn guard(f: impl FnOnce() -> RgStatus) -> RgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == RgStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => {
            set_error("internal panic");
            RgStatus::Panic
        }
    }
}

fn fail(e: Error) -> RgStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn null() -> RgStatus {
    set_error("null pointer argument");
    RgStatus::NullPointer
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> RgStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            RgStatus::Ok
        }
        Err(_) => {
            set_error("string contains a nul byte");
            RgStatus::DomainError
        }
    }
}

/// Builds the analysis of `<gens[0], ..., gens[len-1]>` into `*out`.
///
/// # Safety
/// `gens` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_new(gens: *const u32, len: usize, out: *mut *mut RgAnalysis) -> RgStatus {
    guard(|| {
        if gens.is_null() || out.is_null() {
            return null();
        }
        let gens = std::slice::from_raw_parts(gens, len);
        match NumericalSemigroup::from_generators(gens) {
            Ok(s) => {
                let a = Box::new(RgAnalysis {
                    inner: Analysis::run(&s),
                });
                *out = Box::into_raw(a);
                RgStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `a` must come from [`rg_analysis_new`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_free(a: *mut RgAnalysis) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_conductor(a: *const RgAnalysis, out: *mut u32) -> RgStatus {
    guard(|| match (a.as_ref(), out.is_null()) {
        (Some(a), false) => {
            *out = a.inner.semigroup().conductor();
            RgStatus::Ok
        }
        _ => null(),
    })
}

/// Number of template variables, `M`.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_ambient_dim(a: *const RgAnalysis, out: *mut usize) -> RgStatus {
    guard(|| match (a.as_ref(), out.is_null()) {
        (Some(a), false) => {
            *out = a.inner.presentation.ambient_dim;
            RgStatus::Ok
        }
        _ => null(),
    })
}

/// Dimension after linear elimination. `*has_value` is false when equations
/// remain that are not linear in any variable.
///
/// # Safety
/// `a` must be a live handle; `out` and `has_value` writable.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_affine_dim(
    a: *const RgAnalysis,
    out: *mut usize,
    has_value: *mut bool,
) -> RgStatus {
    guard(|| match (a.as_ref(), out.is_null() || has_value.is_null()) {
        (Some(a), false) => {
            let d = a.inner.elimination.affine_dim;
            *has_value = d.is_some();
            *out = d.unwrap_or(0);
            RgStatus::Ok
        }
        _ => null(),
    })
}

/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_equation_count(a: *const RgAnalysis, out: *mut usize) -> RgStatus {
    guard(|| match (a.as_ref(), out.is_null()) {
        (Some(a), false) => {
            *out = a.inner.presentation.equations.len();
            RgStatus::Ok
        }
        _ => null(),
    })
}

/// The `index`-th defining equation as text; free with [`rg_string_free`].
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_equation(a: *const RgAnalysis, index: usize, out: *mut *mut c_char) -> RgStatus {
    guard(|| match (a.as_ref(), out.is_null()) {
        (Some(a), false) => match a.inner.presentation.equations.get(index) {
            Some(e) => write_string(out, e.poly.to_string()),
            None => {
                set_error(format!("equation index {index} out of range"));
                RgStatus::IndexOutOfRange
            }
        },
        _ => null(),
    })
}

/// The full analysis report as JSON; free with [`rg_string_free`].
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_report_json(a: *const RgAnalysis, out: *mut *mut c_char) -> RgStatus {
    guard(|| match (a.as_ref(), out.is_null()) {
        (Some(a), false) => write_string(out, a.inner.to_report().to_json_string()),
        _ => null(),
    })
}

/// Membership of a point given as `"b7=1,b9=1/2"` (unset variables are 0).
/// With `use_oracle`, the brute-force closure must agree or
/// `RG_STATUS_ORACLE_DISAGREEMENT` is returned.
///
/// # Safety
/// `a` must be a live handle, `point` a nul-terminated string, `in_variety` writable.
#[no_mangle]
pub unsafe extern "C" fn rg_analysis_check_point(
    a: *const RgAnalysis,
    point: *const c_char,
    use_oracle: bool,
    in_variety: *mut bool,
) -> RgStatus {
    guard(|| {
        let (Some(a), false, false) = (a.as_ref(), point.is_null(), in_variety.is_null()) else {
            return null();
        };
        let Ok(text) = CStr::from_ptr(point).to_str() else {
            set_error("point is not valid UTF-8");
            return RgStatus::InvalidInput;
        };
        let t = a.inner.template();
        let p = match parse_point(t, text) {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        let m = match a.inner.presentation.membership(&p) {
            Ok(m) => m,
            Err(e) => return fail(e),
        };
        *in_variety = m.in_variety;
        if use_oracle {
            match verify_point(t, &p) {
                Ok(v) if v == m.in_variety => {}
                Ok(_) => {
                    set_error("equation membership and brute-force closure disagree");
                    return RgStatus::OracleDisagreement;
                }
                Err(e) => return fail(e),
            }
        }
        RgStatus::Ok
    })
}

/// Message for the last failure on this thread; empty after a success.
/// Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn rg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn rg_version() -> *const c_char {
    static V: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}
