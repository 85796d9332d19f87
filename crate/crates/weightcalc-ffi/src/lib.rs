//! C ABI over `weightcalc`.
//!
//! Objects are opaque handles created by the `wc_sequence_*` constructors and
//! [`wc_omega_of`], and released with the matching `wc_*_free`. Every fallible call returns a [`WcStatus`] code; the
//! message of the last failure on the calling thread is available through
//! [`wc_last_error_message`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use weightcalc::conditions::{growth_index, has_mg};
use weightcalc::config::RunConfig;
use weightcalc::io::{load_spec, to_json};
use weightcalc::report::Status;
use weightcalc::seqcore::LogSequence;
use weightcalc::theorems::{suite_status, verify_all};
use weightcalc::weightfun::{omega_of, LogPL};
use weightcalc::Error;

/// Status codes returned by every fallible function.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WcStatus {
    Ok = 0,
    NullPointer = 1,
    Construction = 2,
    Parameter = 3,
    Shape = 4,
    Truncation = 5,
    Precondition = 6,
    Domain = 7,
    Parse = 8,
    Panic = 9,
}

/// Opaque weight sequence.
pub struct WcSequence(LogSequence);

/// Opaque associated weight function.
pub struct WcOmega(LogPL);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> WcStatus {
    match e {
        Error::Construction(_) => WcStatus::Construction,
        Error::Parameter(_) => WcStatus::Parameter,
        Error::Shape(_) => WcStatus::Shape,
        Error::Truncation(_) => WcStatus::Truncation,
        Error::Precondition(_) => WcStatus::Precondition,
        Error::Domain(_) => WcStatus::Domain,
        Error::Parse(_) => WcStatus::Parse,
    }
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (WcStatus, String)>) -> WcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            WcStatus::Panic
        }
    }
}

fn lib(e: Error) -> (WcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (WcStatus, String) {
    (WcStatus::NullPointer, format!("{what} is null"))
}

fn boxed<T>(out: *mut *mut T, value: T) {
    // SAFETY: callers check `out` for null before producing a value.
    unsafe { *out = Box::into_raw(Box::new(value)) };
}

/// Copy the last error message of this thread into `buf` (NUL-terminated, truncated to
/// `len` bytes). Returns the full message length without the terminator, or 0 when there
/// is no error.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn wc_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            // SAFETY: `buf` has room for `len` bytes and `n < len`.
            unsafe {
                ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
                *buf.add(n) = 0;
            }
        }
        bytes.len()
    })
}

/// Build `M_p = (p!)^s` truncated at `p`.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_gevrey(s: f64, p: usize, out: *mut *mut WcSequence) -> WcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        boxed(out, WcSequence(LogSequence::gevrey(s, p).map_err(lib)?));
        Ok(())
    })
}

/// Build `M_p = q^(p^2)` truncated at `p`.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_qgevrey(q: f64, p: usize, out: *mut *mut WcSequence) -> WcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        boxed(out, WcSequence(LogSequence::qgevrey(q, p).map_err(lib)?));
        Ok(())
    })
}

/// Build a sequence from `n` log-quotients `log mu_1, ..., log mu_n`.
///
/// # Safety
/// `log_mu` must point to `n` readable doubles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_from_quotients(
    log_mu: *const f64,
    n: usize,
    out: *mut *mut WcSequence,
) -> WcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if log_mu.is_null() {
            return Err(null("log_mu"));
        }
        // SAFETY: the caller guarantees `n` readable values.
        let data = unsafe { std::slice::from_raw_parts(log_mu, n) };
        boxed(out, WcSequence(LogSequence::from_quotients(data).map_err(lib)?));
        Ok(())
    })
}

/// Build a sequence from an inline spec (`gevrey:1`) or a JSON spec file path.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_from_spec(
    spec: *const c_char,
    default_truncation: usize,
    out: *mut *mut WcSequence,
) -> WcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if spec.is_null() {
            return Err(null("spec"));
        }
        // SAFETY: the caller guarantees a NUL-terminated string.
        let s = unsafe { CStr::from_ptr(spec) }
            .to_str()
            .map_err(|_| (WcStatus::Parse, "spec is not valid UTF-8".to_string()))?;
        boxed(out, WcSequence(load_spec(s, default_truncation).map_err(lib)?));
        Ok(())
    })
}

/// Release a sequence. Null is ignored.
///
/// # Safety
/// `seq` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_free(seq: *mut WcSequence) {
    if !seq.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(seq) });
    }
}

/// Truncation `P` of a sequence, or 0 for null.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_truncation(seq: *const WcSequence) -> usize {
    // SAFETY: the caller guarantees a live handle or null.
    unsafe { seq.as_ref() }.map_or(0, |s| s.0.truncation())
}

/// `log M_p`.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_log_m(seq: *const WcSequence, p: usize, out: *mut f64) -> WcStatus {
    guard(|| {
        // SAFETY: the caller guarantees a live handle or null.
        let s = unsafe { seq.as_ref() }.ok_or_else(|| null("seq"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = *s.0.log_m().get(p).ok_or_else(|| {
            (
                WcStatus::Truncation,
                format!("index {p} beyond truncation {}", s.0.truncation()),
            )
        })?;
        // SAFETY: checked non-null above.
        unsafe { *out = v };
        Ok(())
    })
}

/// Moderate growth index scanned up to `d_max`; writes 0 when no `d <= d_max` passes.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_growth_index(seq: *const WcSequence, d_max: usize, out: *mut usize) -> WcStatus {
    guard(|| {
        // SAFETY: the caller guarantees a live handle or null.
        let s = unsafe { seq.as_ref() }.ok_or_else(|| null("seq"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let cfg = RunConfig::default();
        let g = growth_index(&s.0, d_max.max(1), &cfg).g.unwrap_or(0);
        // SAFETY: checked non-null above.
        unsafe { *out = g };
        Ok(())
    })
}

/// Moderate growth verdict: writes 1 when it holds, 0 otherwise.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wc_sequence_has_mg(seq: *const WcSequence, out: *mut c_int) -> WcStatus {
    guard(|| {
        // SAFETY: the caller guarantees a live handle or null.
        let s = unsafe { seq.as_ref() }.ok_or_else(|| null("seq"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let holds = has_mg(&s.0, &RunConfig::default()).holds;
        // SAFETY: checked non-null above.
        unsafe { *out = c_int::from(holds) };
        Ok(())
    })
}

/// Associated weight function of a log-convex sequence.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wc_omega_of(seq: *const WcSequence, out: *mut *mut WcOmega) -> WcStatus {
    guard(|| {
        // SAFETY: the caller guarantees a live handle or null.
        let s = unsafe { seq.as_ref() }.ok_or_else(|| null("seq"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        boxed(out, WcOmega(omega_of(&s.0).map_err(lib)?));
        Ok(())
    })
}

/// `omega(t)`; fails with a domain error beyond the validity bound.
///
/// # Safety
/// `omega` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wc_omega_eval(omega: *const WcOmega, t: f64, out: *mut f64) -> WcStatus {
    guard(|| {
        // SAFETY: the caller guarantees a live handle or null.
        let w = unsafe { omega.as_ref() }.ok_or_else(|| null("omega"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = w.0.eval(t).map_err(lib)?;
        // SAFETY: checked non-null above.
        unsafe { *out = v };
        Ok(())
    })
}

/// Validity bound `t_max` of a weight function, or 0 for null.
///
/// # Safety
/// `omega` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wc_omega_t_max(omega: *const WcOmega) -> f64 {
    // SAFETY: the caller guarantees a live handle or null.
    unsafe { omega.as_ref() }.map_or(0.0, |w| w.0.t_max())
}

/// Release a weight function. Null is ignored.
///
/// # Safety
/// `omega` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn wc_omega_free(omega: *mut WcOmega) {
    if !omega.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(omega) });
    }
}

/// Run the theorem suite on a sequence. Writes the JSON reports to `*json_out` (release
/// with [`wc_string_free`]) and the combined status to `*suite_status`: 0 consistent,
/// 1 indeterminate, 2 violation found.
///
/// # Safety
/// `seq` must be a live handle; `json_out` and `suite_status_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wc_verify_all(
    seq: *const WcSequence,
    seed: u64,
    json_out: *mut *mut c_char,
    suite_status_out: *mut c_int,
) -> WcStatus {
    guard(|| {
        // SAFETY: the caller guarantees a live handle or null.
        let s = unsafe { seq.as_ref() }.ok_or_else(|| null("seq"))?;
        if json_out.is_null() || suite_status_out.is_null() {
            return Err(null("output pointer"));
        }
        let cfg = RunConfig {
            seed,
            ..RunConfig::default()
        };
        let reports = verify_all(&s.0, &cfg);
        let code = match suite_status(&reports) {
            Status::Consistent => 0,
            Status::Indeterminate => 1,
            Status::ViolationFound => 2,
        };
        let text = CString::new(to_json(&reports)).map_err(|_| (WcStatus::Panic, "NUL in report".to_string()))?;
        // SAFETY: both pointers checked non-null above.
        unsafe {
            *json_out = text.into_raw();
            *suite_status_out = code;
        }
        Ok(())
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn wc_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string came from `CString::into_raw` and is freed once.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn wc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
