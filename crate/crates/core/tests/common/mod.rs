//! Shared helpers for the integration-test suites.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Reference quadrature, deliberately unrelated to the library's
/// Gauss–Legendre machinery: a tanh–sinh (double-exponential) trapezoid
/// rule.  It shares no node family, no substitution, and no refinement
/// logic with the code under test, and it absorbs endpoint singularities
/// like `(b − x)^{−1/2}` natively, so agreement between the two is strong
/// evidence both are right.
///
/// The integrand receives `(x, x − a, b − x)` with the two endpoint gaps
/// computed directly from the transform (never by subtracting nearly
/// equal numbers), so integrands singular at an endpoint keep full
/// precision down to gaps of ~1e−300.
pub fn tanh_sinh<F: Fn(f64, f64, f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    assert!(b > a);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    // At |t| = 3.8 the abscissa sits within ~1e−31 of the endpoint and the
    // weights are below 1e−28; everything beyond is noise for f64 targets.
    const T_MAX: f64 = 3.8;
    let eval = |t: f64| -> f64 {
        let u = 0.5 * PI * t.sinh();
        // 1 ∓ tanh(u) without cancellation.
        let from_right = half * 2.0 / (1.0 + (2.0 * u).exp());
        let from_left = half * 2.0 / (1.0 + (-2.0 * u).exp());
        if from_left <= 0.0 || from_right <= 0.0 {
            return 0.0;
        }
        let x = mid + half * u.tanh();
        let sech = u.cosh().recip();
        let w = half * 0.5 * PI * t.cosh() * sech * sech;
        if !w.is_finite() || w == 0.0 {
            return 0.0;
        }
        let v = f(x, from_left, from_right);
        if v.is_finite() {
            w * v
        } else {
            0.0
        }
    };
    let mut h = 0.5;
    let mut prev = f64::NAN;
    for _ in 0..12 {
        let n = (T_MAX / h).ceil() as i64;
        let mut sum = 0.0;
        for k in -n..=n {
            sum += eval(k as f64 * h);
        }
        let value = sum * h;
        if (value - prev).abs() <= tol * value.abs().max(f64::MIN_POSITIVE) {
            return value;
        }
        prev = value;
        h *= 0.5;
    }
    prev
}

#[cfg(test)]
mod sanity {
    use super::*;

    #[test]
    fn reference_rule_handles_smooth_and_singular_integrands() {
        let smooth = tanh_sinh(&|x: f64, _, _| x.sin(), 0.0, PI, 1e-13);
        assert!((smooth - 2.0).abs() < 1e-12, "smooth: {smooth:e}");
        // ∫₀¹ (1 − x)^{−1/2} dx = 2, singular at the right endpoint.
        let singular = tanh_sinh(&|_, _, gap: f64| gap.sqrt().recip(), 0.0, 1.0, 1e-13);
        assert!((singular - 2.0).abs() < 1e-12, "singular: {singular:e}");
        // An off-centre interval with a left-endpoint singularity:
        // ∫₂⁵ (x − 2)^{−1/2} dx = 2√3.
        let left = tanh_sinh(&|_, gap: f64, _| gap.sqrt().recip(), 2.0, 5.0, 1e-13);
        assert!((left - 2.0 * 3f64.sqrt()).abs() < 1e-12, "left: {left:e}");
    }
}
