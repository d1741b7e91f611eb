//! The spectral (Hoffman-type) colouring bound.
//!
//! For each distance `d` the transform `ψ̃_d` from [`crate::spherical`]
//! takes the value 1 at `s = 0` and dips negative; with
//! `ψ_min = min_s ψ̃_d(s) < 0` the measurable chromatic number of the
//! distance-`d` graph is at least
//!
//! ```text
//! 1 − M/m = 1 − 1/ψ_min
//! ```
//!
//! since `M = φ₀(d)` and `m = φ_{s*/d}(d)` differ from `ψ̃_d(0) = 1` and
//! `ψ̃_d(s*)` by one shared positive factor.  As `d → ∞` the minimiser
//! drifts to the first positive solution `ρ` of `tan s = s`, the minimum
//! tends to `ν = sin ρ/ρ = cos ρ < 0`, and the bound climbs towards
//! `1 − 1/ν ≈ 5.6033`.
//!
//! The search is deliberately boring: a uniform grid over `(0, s_max]`
//! (shared-recurrence scan, so it is cheap), golden-section refinement
//! around the best grid point, then a mandatory scan of `[s_max,
//! tail_factor · s_max]` proving that no deeper value hides beyond the
//! window.  A search that cannot certify its minimum returns an error
//! rather than a number.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::spherical::{phi, FdProfile, QuadratureConfig, SpectralProfile};

/// The spherical function and therefore `M`, `m` are only evaluated for
/// moderate distances; beyond this the bound itself is still fine.
const SPECTRUM_MAX_D: f64 = 300.0;

/// Window and resolution of the frequency search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Right edge of the search window `(0, s_max]`.
    pub s_max: f64,
    /// Grid pitch of the coarse scan.
    pub grid_step: f64,
    /// Width to which golden-section refinement narrows the minimiser.
    pub refine_tol: f64,
    /// The tail scan covers `[s_max, tail_factor · s_max]`.
    pub tail_factor: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            s_max: 60.0,
            grid_step: 0.05,
            refine_tol: 1e-10,
            tail_factor: 10.0,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.s_max.is_finite() && self.s_max >= 20.0) {
            return Err(Error::Domain(format!("s_max {} below 20", self.s_max)));
        }
        if !(self.grid_step.is_finite() && self.grid_step > 0.0 && self.grid_step < 1.0) {
            return Err(Error::Domain(format!(
                "grid_step {} outside (0, 1)",
                self.grid_step
            )));
        }
        if !(self.refine_tol.is_finite() && self.refine_tol > 0.0) {
            return Err(Error::Domain(format!(
                "refine_tol {} not positive",
                self.refine_tol
            )));
        }
        if !(self.tail_factor.is_finite() && self.tail_factor >= 2.0) {
            return Err(Error::Domain(format!(
                "tail_factor {} below 2",
                self.tail_factor
            )));
        }
        Ok(())
    }
}

/// One certified bound evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HoffmanResult {
    pub d: f64,
    /// Certified minimum of `ψ̃_d` over `(0, s_max]` (negative).
    pub psi_min: f64,
    /// Where it is attained.
    pub s_star: f64,
    /// `1 − 1/ψ_min`, always above 1.
    pub bound: f64,
    /// `M = φ₀(d) > 0`, populated for `d ≤ 300`.
    pub spectrum_sup: Option<f64>,
    /// `m = φ_{s*/d}(d) < 0`, populated for `d ≤ 300`.
    pub spectrum_inf: Option<f64>,
}

/// Outcome of the beyond-the-window scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailReport {
    /// True when nothing in the tail dips below the certified minimum.
    pub passed: bool,
    /// Largest `|ψ̃|` seen in `[s_max, tail_factor · s_max]`.
    pub max_magnitude: f64,
    /// Smallest (most negative) tail value.
    pub min_value: f64,
}

/// The `d → ∞` constants: `ρ` solves `tan s = s` in `(π, 3π/2)`,
/// `ν = sin ρ/ρ = cos ρ`, and `limit = 1 − 1/ν ≈ 5.6033`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitConstants {
    pub rho: f64,
    pub nu: f64,
    pub limit: f64,
}

fn grid_count(span: f64, step: f64) -> usize {
    // Tolerate one ulp of slop so spans that are exact multiples of the
    // step keep their last point.
    (span / step + 1e-9).floor() as usize
}

/// Golden-section minimisation of `f` over `[lo, hi]` down to bracket
/// width `tol`; returns the best probed `(x, f(x))`.
fn golden_min(
    mut f: impl FnMut(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..256 {
        if hi - lo <= tol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 <= f2 { (x1, f1) } else { (x2, f2) })
}

/// Coarse grid scan over `(0, s_max]` plus golden-section refinement
/// around the best grid point.  Returns `(ψ_min, s*)`.
fn locate_minimum(sp: &SpectralProfile, cfg: &SearchConfig) -> Result<(f64, f64)> {
    let count = grid_count(cfg.s_max, cfg.grid_step);
    let vals = sp.scan_uniform(cfg.grid_step, cfg.grid_step, count)?;
    let (mut best_i, mut best_v) = (0usize, vals[0]);
    for (i, &v) in vals.iter().enumerate() {
        if v < best_v {
            best_i = i;
            best_v = v;
        }
    }
    let s_best = cfg.grid_step * (best_i + 1) as f64;
    let lo = if best_i == 0 {
        0.5 * cfg.grid_step
    } else {
        cfg.grid_step * best_i as f64
    };
    let hi = (cfg.grid_step * (best_i + 2) as f64).min(cfg.s_max);
    let (s_ref, f_ref) = golden_min(|s| sp.psi(s), lo, hi, cfg.refine_tol)?;
    if best_v < f_ref {
        Ok((best_v, s_best))
    } else {
        Ok((f_ref, s_ref))
    }
}

fn scan_tail(sp: &SpectralProfile, cfg: &SearchConfig) -> Result<(f64, f64)> {
    let count = grid_count((cfg.tail_factor - 1.0) * cfg.s_max, cfg.grid_step) + 1;
    let vals = sp.scan_uniform(cfg.s_max, cfg.grid_step, count)?;
    let mut max_mag = 0.0f64;
    let mut min_val = f64::INFINITY;
    for &v in &vals {
        max_mag = max_mag.max(v.abs());
        min_val = min_val.min(v);
    }
    Ok((max_mag, min_val))
}

fn spectral_profile(d: f64, quad: &QuadratureConfig) -> Result<SpectralProfile> {
    SpectralProfile::new(FdProfile::new(d)?, *quad)
}

/// Certified minimum of `ψ̃_d` over `(0, s_max]`: grid scan, refinement,
/// negativity check, then the tail scan out to `tail_factor · s_max`.
/// Returns `(ψ_min, s*)`; any failed stage is an error.
pub fn find_min(d: f64, cfg: &SearchConfig, quad: &QuadratureConfig) -> Result<(f64, f64)> {
    cfg.validate()?;
    let sp = spectral_profile(d, quad)?;
    let (psi_min, s_star) = locate_minimum(&sp, cfg)?;
    if !(psi_min < 0.0) {
        return Err(Error::Numeric(format!(
            "d = {d}: spectral minimum {psi_min} at s = {s_star} is not negative"
        )));
    }
    let (_, tail_min) = scan_tail(&sp, cfg)?;
    if tail_min < psi_min {
        return Err(Error::Numeric(format!(
            "d = {d}: tail scan found {tail_min} below the window minimum {psi_min}; \
             enlarge s_max"
        )));
    }
    Ok((psi_min, s_star))
}

/// Re-runs the minimum search and reports what the tail scan saw instead
/// of failing; useful for auditing a window choice.
pub fn tail_check(d: f64, cfg: &SearchConfig, quad: &QuadratureConfig) -> Result<TailReport> {
    cfg.validate()?;
    let sp = spectral_profile(d, quad)?;
    let (psi_min, _) = locate_minimum(&sp, cfg)?;
    let (max_magnitude, min_value) = scan_tail(&sp, cfg)?;
    Ok(TailReport {
        passed: min_value >= psi_min,
        max_magnitude,
        min_value,
    })
}

/// The colouring bound `1 − 1/ψ_min` at distance `d`, with the spectral
/// extremes `M` and `m` attached for `d ≤ 300`.
pub fn hoffman_bound(d: f64, cfg: &SearchConfig, quad: &QuadratureConfig) -> Result<HoffmanResult> {
    let run = || -> Result<HoffmanResult> {
        let (psi_min, s_star) = find_min(d, cfg, quad)?;
        let bound = 1.0 - 1.0 / psi_min;
        let (spectrum_sup, spectrum_inf) = if d <= SPECTRUM_MAX_D {
            (Some(phi(0.0, d, quad)?), Some(phi(s_star / d, d, quad)?))
        } else {
            (None, None)
        };
        Ok(HoffmanResult {
            d,
            psi_min,
            s_star,
            bound,
            spectrum_sup,
            spectrum_inf,
        })
    };
    run().map_err(|e| e.with_distance(d))
}

/// Bounds for every `d = from, from + step, …` up to `to`, evaluated in
/// parallel with the order of results fixed by the grid, not the schedule.
pub fn sweep(
    from: f64,
    to: f64,
    step: f64,
    cfg: &SearchConfig,
    quad: &QuadratureConfig,
) -> Result<Vec<HoffmanResult>> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) {
        return Err(Error::Domain("sweep range must be finite".into()));
    }
    if !(from > 0.0 && to >= from && step > 0.0) {
        return Err(Error::Domain(format!(
            "sweep range from {from} to {to} step {step} is empty or negative"
        )));
    }
    let count = grid_count(to - from, step) + 1;
    (0..count)
        .into_par_iter()
        .map(|k| {
            let d = (from + step * k as f64).min(to);
            hoffman_bound(d, cfg, quad).map_err(|e| e.with_distance(d))
        })
        .collect()
}

/// The limiting constants, by bisection of `tan s − s` on `(π, 3π/2)`.
///
/// `tan s − s` is strictly increasing there (its derivative is `tan² s`),
/// so the bracket is trivial.  Bisection runs all the way to `f64`
/// exhaustion — it costs nothing — making `tol` a guaranteed ceiling on
/// the final bracket width rather than the stopping width.
pub fn limit_constants(tol: f64) -> Result<LimitConstants> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain(format!("tol {tol} not positive")));
    }
    let g = |s: f64| s.tan() - s;
    let mut lo = PI + 0.2;
    let mut hi = 1.5 * PI - 1e-3;
    debug_assert!(g(lo) < 0.0 && g(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let rho = 0.5 * (lo + hi);
    let nu = rho.sin() / rho;
    Ok(LimitConstants {
        rho,
        nu,
        limit: 1.0 - 1.0 / nu,
    })
}

// ---------------------------------------------------------------------------
