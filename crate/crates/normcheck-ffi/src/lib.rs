//! C ABI for the normcheck library.
//!
//! Conventions:
//! - `NcSpec` is an opaque handle created by [`nc_spec_from_json`] and
//!   released with [`nc_spec_free`].
//! - Every fallible call returns an [`NcStatus`]; on failure a message is
//!   stored per thread and readable via [`nc_last_error`] until the next
//!   call on that thread.
//! - Vectors cross the boundary as flat `f64` arrays of length
//!   `dim * components` (components is 1 for real specs, 2 for complex with
//!   interleaved re/im), matching the JSON layout.
//! - Strings returned through out-parameters are owned by the caller and
//!   must be released with [`nc_string_free`].
//! - Panics never unwind across the boundary; they surface as
//!   [`NcStatus::Panic`].

use normcheck::pfunc::{p_eval, PContext};
use normcheck::vector::Vector;
use normcheck::{diagnostics, norm_eval, NormSpec, Outcome, SampleConfig};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Opaque handle around a validated norm spec.
pub struct NcSpec(NormSpec);

/// Result codes for every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The spec JSON failed to parse or validate; see `nc_last_error`.
    InvalidSpec = 3,
    /// Evaluation failed (dimension mismatch, bad config, ...); see
    /// `nc_last_error`.
    EvalError = 4,
    /// An internal panic was caught at the boundary.
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(status: NcStatus, message: &str) -> NcStatus {
    set_error(message);
    status
}

fn guarded(body: impl FnOnce() -> NcStatus) -> NcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic with non-string payload".to_string());
            fail(NcStatus::Panic, &message)
        }
    }
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next library call on the same thread; never free it.
#[no_mangle]
pub extern "C" fn nc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses and validates a norm spec from JSON (same schema as the CLI's
/// `--spec` files) and stores a handle in `out_spec`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out_spec` must be a valid
/// pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn nc_spec_from_json(
    json: *const c_char,
    out_spec: *mut *mut NcSpec,
) -> NcStatus {
    guarded(|| {
        if json.is_null() || out_spec.is_null() {
            return fail(NcStatus::NullPointer, "json and out_spec must be non-null");
        }
        let text = match unsafe { CStr::from_ptr(json) }.to_str() {
            Ok(t) => t,
            Err(e) => return fail(NcStatus::InvalidUtf8, &e.to_string()),
        };
        match NormSpec::from_json(text) {
            Ok(spec) => {
                unsafe { *out_spec = Box::into_raw(Box::new(NcSpec(spec))) };
                NcStatus::Ok
            }
            Err(e) => fail(NcStatus::InvalidSpec, &e.to_string()),
        }
    })
}

/// Releases a spec handle. Null is a no-op.
///
/// # Safety
/// `spec` must have come from `nc_spec_from_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nc_spec_free(spec: *mut NcSpec) {
    if !spec.is_null() {
        drop(unsafe { Box::from_raw(spec) });
    }
}

/// Dimension of the spec's vector space.
///
/// # Safety
/// `spec` must be a live handle from `nc_spec_from_json`.
#[no_mangle]
pub unsafe extern "C" fn nc_spec_dim(spec: *const NcSpec) -> usize {
    if spec.is_null() {
        return 0;
    }
    unsafe { &*spec }.0.dim()
}

/// Number of `f64` slots a vector for this spec occupies: `dim` for real
/// specs, `2 * dim` for complex (interleaved re/im).
///
/// # Safety
/// `spec` must be a live handle from `nc_spec_from_json`.
#[no_mangle]
pub unsafe extern "C" fn nc_spec_slots(spec: *const NcSpec) -> usize {
    if spec.is_null() {
        return 0;
    }
    let spec = &unsafe { &*spec }.0;
    spec.dim() * spec.field().components()
}

unsafe fn vector_from(spec: &NormSpec, coords: *const f64, len: usize) -> Result<Vector, String> {
    if coords.is_null() {
        return Err("coordinate pointer must be non-null".to_string());
    }
    let slice = unsafe { std::slice::from_raw_parts(coords, len) };
    Vector::new(spec.field(), slice.to_vec())
        .map_err(|e| e.to_string())
        .and_then(|v| {
            if v.dim() != spec.dim() {
                Err(format!(
                    "expected {} coordinate slots, got {len}",
                    spec.dim() * spec.field().components()
                ))
            } else {
                Ok(v)
            }
        })
}

/// Evaluates the norm at a flat coordinate array of `len` slots.
///
/// # Safety
/// `spec` must be a live handle; `coords` must point to `len` readable
/// doubles; `out_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_norm_eval(
    spec: *const NcSpec,
    coords: *const f64,
    len: usize,
    out_value: *mut f64,
) -> NcStatus {
    guarded(|| {
        if spec.is_null() || out_value.is_null() {
            return fail(NcStatus::NullPointer, "spec and out_value must be non-null");
        }
        let spec = &unsafe { &*spec }.0;
        let x = match unsafe { vector_from(spec, coords, len) } {
            Ok(x) => x,
            Err(e) => return fail(NcStatus::EvalError, &e),
        };
        match norm_eval(spec, &x) {
            Ok(v) => {
                unsafe { *out_value = v };
                NcStatus::Ok
            }
            Err(e) => fail(NcStatus::EvalError, &e.to_string()),
        }
    })
}

/// Evaluates the anchored profile
/// `p(x) = sqrt((norm(x+y)^2 + norm(x-y)^2)/2 - 1)`.
///
/// The anchor `y` is normalized internally, so any nonzero vector works.
/// `out_flagged` may be null; when provided it receives 1 if the radicand
/// needed a beyond-noise clamp and 0 otherwise.
///
/// # Safety
/// `spec` must be a live handle; `y`/`x` must point to `y_len`/`x_len`
/// readable doubles; `out_value` must be writable; `out_flagged` must be
/// writable when non-null.
#[no_mangle]
pub unsafe extern "C" fn nc_p_eval(
    spec: *const NcSpec,
    y: *const f64,
    y_len: usize,
    x: *const f64,
    x_len: usize,
    out_value: *mut f64,
    out_flagged: *mut bool,
) -> NcStatus {
    guarded(|| {
        if spec.is_null() || out_value.is_null() {
            return fail(NcStatus::NullPointer, "spec and out_value must be non-null");
        }
        let spec = &unsafe { &*spec }.0;
        let y = match unsafe { vector_from(spec, y, y_len) } {
            Ok(v) => v,
            Err(e) => return fail(NcStatus::EvalError, &e),
        };
        let x = match unsafe { vector_from(spec, x, x_len) } {
            Ok(v) => v,
            Err(e) => return fail(NcStatus::EvalError, &e),
        };
        let result = PContext::new(spec, &y).and_then(|ctx| p_eval(&ctx, &x));
        match result {
            Ok(p) => {
                unsafe {
                    *out_value = p.value;
                    if !out_flagged.is_null() {
                        *out_flagged = p.flagged;
                    }
                }
                NcStatus::Ok
            }
            Err(e) => fail(NcStatus::EvalError, &e.to_string()),
        }
    })
}

/// Classifies the spec and stores the full verdict as a JSON string in
/// `out_json` (schema identical to the CLI's `verdict.json`).
///
/// `out_not_inner_product` may be null; when provided it receives 1 for a
/// falsified norm and 0 for a consistent one. Pass `n_samples > 0`; `seed`
/// picks the deterministic sample streams; `threshold` must be positive.
///
/// # Safety
/// `spec` must be a live handle; `out_json` must be writable;
/// `out_not_inner_product` must be writable when non-null.
#[no_mangle]
pub unsafe extern "C" fn nc_classify(
    spec: *const NcSpec,
    n_samples: u64,
    seed: u64,
    threshold: f64,
    out_json: *mut *mut c_char,
    out_not_inner_product: *mut bool,
) -> NcStatus {
    guarded(|| {
        if spec.is_null() || out_json.is_null() {
            return fail(NcStatus::NullPointer, "spec and out_json must be non-null");
        }
        let spec = &unsafe { &*spec }.0;
        let cfg = SampleConfig::new(spec.dim(), spec.field())
            .with_samples(n_samples)
            .with_seed(seed);
        let verdict = match diagnostics::classify(spec, &cfg, threshold) {
            Ok(v) => v,
            Err(e) => return fail(NcStatus::EvalError, &e.to_string()),
        };
        let json = match serde_json::to_string(&verdict) {
            Ok(j) => j,
            Err(e) => return fail(NcStatus::EvalError, &e.to_string()),
        };
        let c = match CString::new(json) {
            Ok(c) => c,
            Err(e) => return fail(NcStatus::EvalError, &e.to_string()),
        };
        unsafe {
            *out_json = c.into_raw();
            if !out_not_inner_product.is_null() {
                *out_not_inner_product = verdict.outcome == Outcome::NotInnerProduct;
            }
        }
        NcStatus::Ok
    })
}

/// Releases a string produced by this library. Null is a no-op.
///
/// # Safety
/// `s` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
