//! C ABI over the chromatic-bound library.
//!
//! Every entry point returns a [`HypcStatus`]; results travel through
//! caller-supplied out-pointers (plain structs of doubles) or, for sweeps,
//! an opaque handle with explicit `run`/`len`/`get`/`free` lifecycle.  All
//! functions are panic-safe: a Rust panic is caught at the boundary and
//! reported as `HYPC_STATUS_NUMERIC_FAILURE` instead of unwinding into C.
//!
//! The generated header lands in `include/hypchroma.h`.  Typical use:
//!
//! ```c
//! HypcBoundResult r;
//! if (hypc_bound(4.0, NULL, &r) == HYPC_STATUS_OK) {
//!     printf("chromatic lower bound at d=4: %.12f\n", r.bound);
//! }
//! ```

use std::ffi::c_char;
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use hypchroma::hoffman::{hoffman_bound, limit_constants, sweep, HoffmanResult, SearchConfig};
use hypchroma::spherical::{l1_deviation, phi, FdProfile, QuadratureConfig};
use hypchroma::spindle::build_spindle;
use hypchroma::Error;

/// Outcome of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypcStatus {
    /// The call succeeded and the out-parameters are filled in.
    Ok = 0,
    /// An argument was outside its documented domain.
    InvalidArgument = 1,
    /// The computation failed numerically (quadrature budget exhausted,
    /// certification check failed, or an internal panic was caught).
    NumericFailure = 2,
    /// A required pointer was null.
    NullPointer = 3,
}

/// The distance-to-infinity constants of the colouring bound:
/// `rho` solves `tan s = s` on `(π, 3π/2)`, `nu = sin(rho)/rho`, and
/// `limit = 1 − 1/nu ≈ 5.6033`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HypcLimitConstants {
    pub rho: f64,
    pub nu: f64,
    pub limit: f64,
}

/// Tuning knobs of the spectral minimum search; get defaults from
/// `hypc_search_options_default`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HypcSearchOptions {
    /// Right edge of the frequency search window (at least 20).
    pub s_max: f64,
    /// Pitch of the coarse scan, in (0, 1).
    pub grid_step: f64,
    /// Width to which the minimiser is refined (positive).
    pub refine_tol: f64,
    /// The safety scan covers `[s_max, tail_factor * s_max]` (at least 2).
    pub tail_factor: f64,
}

/// One certified bound evaluation.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HypcBoundResult {
    /// The distance the bound was evaluated at.
    pub d: f64,
    /// Certified minimum of the normalised spectrum (negative).
    pub psi_min: f64,
    /// Frequency where the minimum is attained.
    pub s_star: f64,
    /// The chromatic lower bound `1 − 1/psi_min`.
    pub bound: f64,
    /// Largest spectral value (NaN when `has_spectrum` is false).
    pub spectrum_sup: f64,
    /// Smallest spectral value (NaN when `has_spectrum` is false).
    pub spectrum_inf: f64,
    /// Whether the two spectral extremes were evaluated (d ≤ 300).
    pub has_spectrum: bool,
}

/// A certified seven-point spindle embedding: eleven unit edges, chromatic
/// number four.  `points` are Cartesian coordinates in the unit disk;
/// `edges` index into them.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HypcSpindle {
    /// Common hyperbolic length of the eleven edges.
    pub d: f64,
    /// Apex angle of each equilateral triangle.
    pub alpha: f64,
    /// Length of the two long diagonals.
    pub leg: f64,
    /// Rotation between the two rhombi.
    pub theta: f64,
    /// Largest certified deviation of an edge length from `d`.
    pub max_deviation: f64,
    /// Exhaustively computed chromatic number (always 4).
    pub chromatic_number: u32,
    pub points: [[f64; 2]; 7],
    pub edges: [[u32; 2]; 11],
}

/// Result list of a parameter sweep; opaque, free with `hypc_sweep_free`.
pub struct HypcSweep {
    results: Vec<HoffmanResult>,
}

fn status_of(e: &Error) -> HypcStatus {
    match e {
        Error::Domain(_) | Error::GraphTooLarge(_) => HypcStatus::InvalidArgument,
        Error::Numeric(_) | Error::Quadrature(_) => HypcStatus::NumericFailure,
    }
}

/// Panics must not unwind across the C boundary.
fn guarded(f: impl FnOnce() -> HypcStatus + UnwindSafe) -> HypcStatus {
    catch_unwind(f).unwrap_or(HypcStatus::NumericFailure)
}

fn search_config(options: *const HypcSearchOptions) -> SearchConfig {
    if options.is_null() {
        return SearchConfig::default();
    }
    let o = unsafe { &*options };
    SearchConfig {
        s_max: o.s_max,
        grid_step: o.grid_step,
        refine_tol: o.refine_tol,
        tail_factor: o.tail_factor,
    }
}

fn bound_result(r: &HoffmanResult) -> HypcBoundResult {
    HypcBoundResult {
        d: r.d,
        psi_min: r.psi_min,
        s_star: r.s_star,
        bound: r.bound,
        spectrum_sup: r.spectrum_sup.unwrap_or(f64::NAN),
        spectrum_inf: r.spectrum_inf.unwrap_or(f64::NAN),
        has_spectrum: r.spectrum_sup.is_some(),
    }
}

/// Fills `out` with the `d → ∞` constants of the bound.
///
/// # Safety
///
/// `out` must be null or point to writable memory for one value.
#[no_mangle]
pub unsafe extern "C" fn hypc_limit_constants(out: *mut HypcLimitConstants) -> HypcStatus {
    if out.is_null() {
        return HypcStatus::NullPointer;
    }
    guarded(|| match limit_constants(1e-12) {
        Ok(c) => {
            unsafe {
                *out = HypcLimitConstants {
                    rho: c.rho,
                    nu: c.nu,
                    limit: c.limit,
                };
            }
            HypcStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Fills `out` with the default search options.
///
/// # Safety
///
/// `out` must be null or point to writable memory for one value.
#[no_mangle]
pub unsafe extern "C" fn hypc_search_options_default(out: *mut HypcSearchOptions) -> HypcStatus {
    if out.is_null() {
        return HypcStatus::NullPointer;
    }
    let d = SearchConfig::default();
    unsafe {
        *out = HypcSearchOptions {
            s_max: d.s_max,
            grid_step: d.grid_step,
            refine_tol: d.refine_tol,
            tail_factor: d.tail_factor,
        };
    }
    HypcStatus::Ok
}

/// Certified chromatic lower bound at distance `d` (0 < d ≤ 700).
/// `options` may be null for defaults.
///
/// # Safety
///
/// `options` must be null or point to a valid value; `out` must be null or
/// point to writable memory for one value.
#[no_mangle]
pub unsafe extern "C" fn hypc_bound(
    d: f64,
    options: *const HypcSearchOptions,
    out: *mut HypcBoundResult,
) -> HypcStatus {
    if out.is_null() {
        return HypcStatus::NullPointer;
    }
    guarded(|| {
        let cfg = search_config(options);
        match hoffman_bound(d, &cfg, &QuadratureConfig::default()) {
            Ok(r) => {
                unsafe { *out = bound_result(&r) };
                HypcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The spherical function at spectral parameter `lambda` and distance `d`
/// (0 < d ≤ 700).
///
/// # Safety
///
/// `out` must be null or point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn hypc_spherical_function(
    lambda: f64,
    d: f64,
    out: *mut f64,
) -> HypcStatus {
    if out.is_null() {
        return HypcStatus::NullPointer;
    }
    guarded(|| match phi(lambda, d, &QuadratureConfig::default()) {
        Ok(v) => {
            unsafe { *out = v };
            HypcStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// L¹ distance between the normalised radial density at distance `d` and
/// the uniform density; decreases towards 0 as `d` grows.
///
/// # Safety
///
/// `out` must be null or point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn hypc_l1_deviation(d: f64, out: *mut f64) -> HypcStatus {
    if out.is_null() {
        return HypcStatus::NullPointer;
    }
    guarded(|| {
        let run = || l1_deviation(&FdProfile::new(d)?, &QuadratureConfig::default());
        match run() {
            Ok(v) => {
                unsafe { *out = v };
                HypcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds and certifies the seven-point spindle embedding with edge
/// length `d` (0 < d ≤ 700).
///
/// # Safety
///
/// `out` must be null or point to writable memory for one value.
#[no_mangle]
pub unsafe extern "C" fn hypc_spindle(d: f64, out: *mut HypcSpindle) -> HypcStatus {
    if out.is_null() {
        return HypcStatus::NullPointer;
    }
    guarded(|| match build_spindle(d) {
        Ok(emb) => {
            let mut points = [[0.0f64; 2]; 7];
            for (slot, p) in points.iter_mut().zip(emb.points()) {
                *slot = [p.re(), p.im()];
            }
            let mut edges = [[0u32; 2]; 11];
            for (slot, e) in edges.iter_mut().zip(emb.edges()) {
                *slot = [e[0] as u32, e[1] as u32];
            }
            unsafe {
                *out = HypcSpindle {
                    d: emb.d(),
                    alpha: emb.alpha(),
                    leg: emb.leg(),
                    theta: emb.theta(),
                    max_deviation: emb.max_deviation(),
                    chromatic_number: emb.graph().chromatic_number(),
                    points,
                    edges,
                };
            }
            HypcStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Evaluates the bound on the grid `from, from + step, …, to` and hands
/// back an owning handle.  On success `*out` must eventually be released
/// with `hypc_sweep_free`; on failure `*out` is set to null.
///
/// # Safety
///
/// `options` must be null or point to a valid value; `out` must be null or
/// point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn hypc_sweep_run(
    from: f64,
    to: f64,
    step: f64,
    options: *const HypcSearchOptions,
    out: *mut *mut HypcSweep,
) -> HypcStatus {
    if out.is_null() {
        return HypcStatus::NullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    guarded(|| {
        let cfg = search_config(options);
        match sweep(from, to, step, &cfg, &QuadratureConfig::default()) {
            Ok(results) => {
                let handle = Box::new(HypcSweep { results });
                unsafe { *out = Box::into_raw(handle) };
                HypcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of results held by `sweep`; 0 for a null handle.
///
/// # Safety
///
/// `sweep` must be null or a live handle from `hypc_sweep_run`.
#[no_mangle]
pub unsafe extern "C" fn hypc_sweep_len(sweep: *const HypcSweep) -> usize {
    if sweep.is_null() {
        return 0;
    }
    unsafe { (*sweep).results.len() }
}

/// Copies result `index` of `sweep` into `out`.
///
/// # Safety
///
/// `sweep` must be null or a live handle from `hypc_sweep_run`; `out` must
/// be null or point to writable memory for one value.
#[no_mangle]
pub unsafe extern "C" fn hypc_sweep_get(
    sweep: *const HypcSweep,
    index: usize,
    out: *mut HypcBoundResult,
) -> HypcStatus {
    if sweep.is_null() || out.is_null() {
        return HypcStatus::NullPointer;
    }
    let results = unsafe { &(*sweep).results };
    match results.get(index) {
        Some(r) => {
            unsafe { *out = bound_result(r) };
            HypcStatus::Ok
        }
        None => HypcStatus::InvalidArgument,
    }
}

/// Releases a sweep handle; a null handle is a no-op.
///
/// # Safety
///
/// `sweep` must be null or a live handle from `hypc_sweep_run`, and must
/// not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hypc_sweep_free(sweep: *mut HypcSweep) {
    if !sweep.is_null() {
        drop(unsafe { Box::from_raw(sweep) });
    }
}

/// Static, NUL-terminated name of a status code.
#[no_mangle]
pub extern "C" fn hypc_status_name(status: HypcStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        HypcStatus::Ok => b"ok\0",
        HypcStatus::InvalidArgument => b"invalid argument\0",
        HypcStatus::NumericFailure => b"numeric failure\0",
        HypcStatus::NullPointer => b"null pointer\0",
    };
    name.as_ptr() as *const c_char
}
