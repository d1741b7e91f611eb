//! Closed-form geometry on the Poincaré disk (curvature −1).
//!
//! Points live strictly inside the unit disk and orientation-preserving
//! isometries are the Möbius maps `z ↦ (az + b)/(b̄z + ā)` with
//! `|a|² − |b|² = 1`.  The distance comes from the Möbius-invariant ratio
//! `δ = |p − q| / |1 − p̄q|` via `dist = ln((1 + δ)/(1 − δ))`.
//!
//! Everything here is evaluated in rearrangements that avoid catastrophic
//! cancellation.  The load-bearing trick is the exact identity
//!
//! ```text
//! |1 − p̄q|² = |p − q|² + (1 − |p|²)(1 − |q|²)
//! ```
//!
//! which lets the distance be written without ever subtracting two nearby
//! `O(1)` quantities: the factors `1 − |p|²` are computed with compensated
//! products, so points a dozen units from the origin (Euclidean norm within
//! `~1e−6` of the rim) still get full relative precision.

use std::f64::consts::{LN_2, PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest `f64` strictly below 1; Euclidean norms are clamped here when a
/// map or a polar placement lands within one rounding step of the rim.
pub(crate) const MAX_INSIDE: f64 = 1.0 - f64::EPSILON / 2.0;

/// Translation lengths and circle radii are capped here; beyond it `sinh`
/// and `cosh` squares leave the `f64` exponent range.
pub(crate) const MAX_DIST: f64 = 700.0;

// ---------------------------------------------------------------------------
// Compensated kernels
// ---------------------------------------------------------------------------

/// Product with its exact rounding error: `a * b = p + e`.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

/// Sum with its exact rounding error: `a + b = s + e` (Knuth's version,
/// valid for any magnitude ordering).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// `1 − (re² + im²)` to full relative precision for `re² + im² < 1`.
///
/// The naive expression loses all significance as the point approaches the
/// rim, which is exactly where hyperbolic distances blow up; one compensated
/// pass keeps the relative error at a few ulp.
pub(crate) fn one_minus_norm_sq(re: f64, im: f64) -> f64 {
    let (px, ex) = two_prod(re, re);
    let (py, ey) = two_prod(im, im);
    let (s1, e1) = two_sum(1.0, -px);
    let (s2, e2) = two_sum(s1, -py);
    s2 + (e1 + e2 - ex - ey)
}

/// `ln sinh x` for `x ≥ 0` without overflow (`−∞` at `x = 0`).
pub(crate) fn ln_sinh(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= 300.0 {
        x.sinh().ln()
    } else {
        x - LN_2 + (-(2.0 * x)).exp().ln_1p()
    }
}

/// `ln(eᵘ + eᵛ)` evaluated in log space.
pub(crate) fn log_add_exp(u: f64, v: f64) -> f64 {
    if u == f64::NEG_INFINITY {
        return v;
    }
    if v == f64::NEG_INFINITY {
        return u;
    }
    let (hi, lo) = if u >= v { (u, v) } else { (v, u) };
    hi + (lo - hi).exp().ln_1p()
}

fn require_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {x}")))
    }
}

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

/// A point strictly inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    re: f64,
    im: f64,
}

impl DiskPoint {
    /// Builds a point from Euclidean coordinates; rejects non-finite input
    /// and anything on or outside the unit circle.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        require_finite("re", re)?;
        require_finite("im", im)?;
        if re * re + im * im >= 1.0 {
            return Err(Error::Domain(format!(
                "point ({re}, {im}) is not inside the unit disk"
            )));
        }
        Ok(Self { re, im })
    }

    /// The centre of the disk.
    pub const fn origin() -> Self {
        Self { re: 0.0, im: 0.0 }
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    /// Internal constructor that pulls values within a rounding step of the
    /// rim back inside instead of failing; Möbius images and polar
    /// placements of far points land here.
    pub(crate) fn clamped(re: f64, im: f64) -> Self {
        let n2 = re * re + im * im;
        if n2 < 1.0 {
            Self { re, im }
        } else {
            let scale = MAX_INSIDE / n2.sqrt();
            Self {
                re: re * scale,
                im: im * scale,
            }
        }
    }
}

impl From<DiskPoint> for Complex64 {
    fn from(p: DiskPoint) -> Self {
        Complex64::new(p.re, p.im)
    }
}

/// A point of the boundary circle, stored as its canonical angle in
/// `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    angle: f64,
}

impl BoundaryPoint {
    /// Builds a boundary point from any finite angle, reduced mod `2π`.
    pub fn new(angle: f64) -> Result<Self> {
        require_finite("angle", angle)?;
        let mut a = angle.rem_euclid(TAU);
        if a >= TAU {
            a = 0.0;
        }
        Ok(Self { angle: a })
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// The boundary point as a unit complex number.
    pub fn unit(&self) -> Complex64 {
        Complex64::new(self.angle.cos(), self.angle.sin())
    }
}

// ---------------------------------------------------------------------------
// Distance and brackets
// ---------------------------------------------------------------------------

/// Hyperbolic distance between two points of the disk.
///
/// With `A = |p − q|` and `B = |1 − p̄q| = √(A² + uv)` where `u = 1 − |p|²`
/// and `v = 1 − |q|²`, the distance is `ln((B + A)/(B − A))`.  For nearby
/// points this is `ln1p(2A/(B − A))`; for distant ones the denominator is
/// expanded through `B² − A² = uv`, giving `2 ln(A + B) − ln u − ln v`.
/// Neither branch subtracts nearly equal quantities.
pub fn dist(p: DiskPoint, q: DiskPoint) -> f64 {
    let dx = p.re - q.re;
    let dy = p.im - q.im;
    let a2 = dx * dx + dy * dy;
    if a2 == 0.0 {
        return 0.0;
    }
    let u = one_minus_norm_sq(p.re, p.im);
    let v = one_minus_norm_sq(q.re, q.im);
    let a = a2.sqrt();
    let b = (a2 + u * v).sqrt();
    if a < 0.5 * b {
        (2.0 * a / (b - a)).ln_1p()
    } else {
        2.0 * (a + b).ln() - u.ln() - v.ln()
    }
}

/// Horocycle bracket `⟨p, b⟩ = ln((1 − |p|²)/|p − b|²)`: the signed distance
/// from the origin's horocycle at `b` to the one through `p`.
///
/// On the radius towards `b` it reduces to the signed radial distance,
/// and it transforms under isometries by the cocycle rule
/// `⟨(h∘g)·0, b⟩ = ⟨g·0, h⁻¹·b⟩ + ⟨h·0, b⟩`.
pub fn horocycle_bracket(p: DiskPoint, b: BoundaryPoint) -> f64 {
    let u = one_minus_norm_sq(p.re, p.im);
    let dx = p.re - b.angle.cos();
    let dy = p.im - b.angle.sin();
    u.ln() - (dx * dx + dy * dy).ln()
}

// ---------------------------------------------------------------------------
// Isometries
// ---------------------------------------------------------------------------

/// An orientation-preserving isometry `z ↦ (az + b)/(b̄z + ā)` of the disk,
/// kept normalised to `|a|² − |b|² = 1`.
///
/// Coefficients stay bounded by `cosh(d/2)` for a translation length `d`,
/// so maps built from [`MobiusMap::translate_to`] respect the library-wide
/// distance cap and never overflow; compositions of many extreme maps are
/// the caller's responsibility.
#[derive(Debug, Clone, Copy)]
pub struct MobiusMap {
    a: Complex64,
    b: Complex64,
}

impl MobiusMap {
    /// The identity map.
    pub fn identity() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// The translation along the positive real axis taking the origin to
    /// the point at hyperbolic distance `d`.
    pub fn translate_to(d: f64) -> Result<Self> {
        require_finite("d", d)?;
        if !(0.0..=MAX_DIST).contains(&d) {
            return Err(Error::Domain(format!(
                "translation length {d} outside [0, {MAX_DIST}]"
            )));
        }
        let h = 0.5 * d;
        Ok(Self {
            a: Complex64::new(h.cosh(), 0.0),
            b: Complex64::new(h.sinh(), 0.0),
        })
    }

    /// The rotation by `theta` about the origin.
    pub fn rotation(theta: f64) -> Result<Self> {
        require_finite("theta", theta)?;
        let h = 0.5 * theta;
        Ok(Self {
            a: Complex64::new(h.cos(), h.sin()),
            b: Complex64::new(0.0, 0.0),
        })
    }

    /// The coefficient pair `(a, b)`.
    pub fn coeffs(&self) -> (Complex64, Complex64) {
        (self.a, self.b)
    }

    /// `self ∘ other` — `other` acts first.  The result is renormalised so
    /// the unit-determinant constraint does not drift under long chains.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: self.a * other.a + self.b * other.b.conj(),
            b: self.a * other.b + self.b * other.a.conj(),
        }
        .renormalised()
    }

    /// The inverse isometry.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// `|a|² − |b|² − 1`, computed with compensated arithmetic; a drift
    /// diagnostic that stays below `1e−12` for maps built by this library.
    pub fn su_defect(&self) -> f64 {
        det_minus_one(self.a, self.b)
    }

    /// Applies the map to an interior point.  Images that round onto the
    /// rim are pulled back inside by one ulp; mathematically the image is
    /// always interior.
    pub fn apply(&self, p: DiskPoint) -> DiskPoint {
        let z = Complex64::from(p);
        let w = (self.a * z + self.b) / (self.b.conj() * z + self.a.conj());
        DiskPoint::clamped(w.re, w.im)
    }

    /// Applies the map to a boundary point (the induced circle map).
    pub fn apply_boundary(&self, b: BoundaryPoint) -> BoundaryPoint {
        let z = b.unit();
        let w = (self.a * z + self.b) / (self.b.conj() * z + self.a.conj());
        BoundaryPoint::new(w.arg()).expect("finite boundary image")
    }

    fn renormalised(self) -> Self {
        let det = det_minus_one(self.a, self.b) + 1.0;
        if det > 0.0 && det.is_finite() {
            let s = 1.0 / det.sqrt();
            Self {
                a: self.a * s,
                b: self.b * s,
            }
        } else {
            self
        }
    }
}

/// `|a|² − |b|² − 1` with one compensated accumulation pass.
fn det_minus_one(a: Complex64, b: Complex64) -> f64 {
    let (p1, e1) = two_prod(a.re, a.re);
    let (p2, e2) = two_prod(a.im, a.im);
    let (p3, e3) = two_prod(b.re, b.re);
    let (p4, e4) = two_prod(b.im, b.im);
    let (s1, f1) = two_sum(p1, p2);
    let (s2, f2) = two_sum(s1, -p3);
    let (s3, f3) = two_sum(s2, -p4);
    let (s4, f4) = two_sum(s3, -1.0);
    s4 + (f1 + f2 + f3 + f4 + e1 + e2 - e3 - e4)
}

// ---------------------------------------------------------------------------
// Circles, triangles, polar coordinates
// ---------------------------------------------------------------------------

/// Euclidean radius, hyperbolic circumference and hyperbolic area of the
/// circle of hyperbolic radius `d` about the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleGeometry {
    /// `tanh(d/2)` — saturates towards 1 beyond `d ≈ 38`.
    pub euclidean_radius: f64,
    /// `2π sinh d`.
    pub circumference: f64,
    /// `2π (cosh d − 1) = 4π sinh²(d/2)`.
    pub area: f64,
}

/// Circle data for radius `d ∈ (0, 700]`.
pub fn circle_geometry(d: f64) -> Result<CircleGeometry> {
    require_finite("d", d)?;
    if !(d > 0.0 && d <= MAX_DIST) {
        return Err(Error::Domain(format!(
            "circle radius {d} outside (0, {MAX_DIST}]"
        )));
    }
    let half = 0.5 * d;
    let sh = half.sinh();
    Ok(CircleGeometry {
        euclidean_radius: half.tanh(),
        circumference: TAU * d.sinh(),
        area: 2.0 * TAU * sh * sh,
    })
}

/// Hyperbolic law of cosines: the side `c` opposite the angle `gamma`
/// enclosed by sides `a` and `b`, i.e. `cosh c = cosh a cosh b −
/// sinh a sinh b cos γ`.
///
/// Evaluated through `cosh c − 1 = 2 sinh²((a−b)/2) + 2 sinh a sinh b
/// sin²(γ/2)`, which is a sum of non-negative terms: small sides, nearly
/// equal sides and tiny angles all come out to full precision, including
/// the Euclidean regime where `c²` shrinks like `a² + b² − 2ab cos γ`.
/// Sides beyond 300 switch to log space and may be arbitrarily large.
pub fn law_of_cosines(a: f64, b: f64, gamma: f64) -> Result<f64> {
    require_finite("a", a)?;
    require_finite("b", b)?;
    require_finite("gamma", gamma)?;
    if a < 0.0 || b < 0.0 {
        return Err(Error::Domain(format!("sides must be non-negative, got ({a}, {b})")));
    }
    if !(0.0..=PI).contains(&gamma) {
        return Err(Error::Domain(format!("angle {gamma} outside [0, π]")));
    }
    let q = (0.5 * gamma).sin();
    let t = if a.max(b) <= 300.0 {
        let s = (0.5 * (a - b)).sinh();
        2.0 * s * s + 2.0 * (a.sinh() * q) * (b.sinh() * q)
    } else {
        let t1 = if a == b {
            f64::NEG_INFINITY
        } else {
            LN_2 + 2.0 * ln_sinh(0.5 * (a - b).abs())
        };
        let t2 = if q == 0.0 || a == 0.0 || b == 0.0 {
            f64::NEG_INFINITY
        } else {
            LN_2 + ln_sinh(a) + ln_sinh(b) + 2.0 * q.ln()
        };
        let t_ln = log_add_exp(t1, t2);
        if t_ln > 40.0 {
            // cosh c ≈ t/…: acosh(1 + t) = ln 2t up to O(1/t).
            return Ok(LN_2 + t_ln);
        }
        t_ln.exp()
    };
    Ok((t + t.sqrt() * (t + 2.0).sqrt()).ln_1p())
}

/// The interior point at hyperbolic distance `r` from the origin in
/// direction `theta` (Euclidean radius `tanh(r/2)`).
///
/// Beyond `r ≈ 38` the Euclidean coordinate saturates one ulp below the
/// rim — `f64` has no resolution left there, so round-tripping the radius
/// through [`dist`] degrades; polar-form computations
/// ([`dist_polar`]) stay exact at any radius.
pub fn polar_point(r: f64, theta: f64) -> Result<DiskPoint> {
    require_finite("r", r)?;
    require_finite("theta", theta)?;
    if r < 0.0 {
        return Err(Error::Domain(format!("radius {r} is negative")));
    }
    let t = (0.5 * r).tanh().min(MAX_INSIDE);
    Ok(DiskPoint::clamped(t * theta.cos(), t * theta.sin()))
}

/// Distance between the points `(r₁, θ₁)` and `(r₂, θ₂)` given in
/// hyperbolic polar coordinates, via the law of cosines at the origin.
/// Unlike [`dist`] this never leaves polar form, so it is reliable for
/// radii far beyond what disk coordinates can represent.
pub fn dist_polar(r1: f64, theta1: f64, r2: f64, theta2: f64) -> Result<f64> {
    require_finite("theta1", theta1)?;
    require_finite("theta2", theta2)?;
    // Absolute value *before* any 2π reduction: at large radii the chord is
    // violently sensitive to the gap (∂c/∂γ ~ sinh r), and a tiny negative
    // gap routed through rem_euclid would come back as 2π − γ with an
    // absolute error of ulp(2π) — six digits of the gap gone.
    let mut delta = (theta1 - theta2).abs();
    if delta >= TAU {
        delta = delta.rem_euclid(TAU);
    }
    if delta > PI {
        delta = TAU - delta;
    }
    law_of_cosines(r1, r2, delta.clamp(0.0, PI))
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    const LN_3: f64 = 1.0986122886681098;

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!(
            (got - want).abs() <= tol,
            "got {got:.17e}, want {want:.17e} (tol {tol:.1e}, err {:.2e})",
            (got - want).abs()
        );
    }

    fn pt(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(re, im).unwrap()
    }

    #[test]
    fn dist_matches_closed_forms() {
        assert_eq!(dist(DiskPoint::origin(), DiskPoint::origin()), 0.0);
        assert_close(dist(DiskPoint::origin(), pt(0.5, 0.0)), LN_3, 1e-15);
        let q = pt(1.0f64.tanh(), 0.0);
        assert_close(dist(DiskPoint::origin(), q), 2.0, 1e-14);
        let p = pt(-0.3, 0.72);
        assert_eq!(dist(p, p), 0.0);
        assert_eq!(dist(p, q), dist(q, p));
    }

    #[test]
    fn dist_is_isometry_invariant() {
        let m = MobiusMap::translate_to(3.0)
            .unwrap()
            .compose(&MobiusMap::rotation(1.1).unwrap());
        // Images stay within radius ~8, where coordinate rounding costs
        // well under 1e-12 of distance.
        for &(r1, t1, r2, t2) in &[
            (0.5, 0.3, 1.5, 2.0),
            (4.0, 0.1, 4.0, 0.2),
            (5.0, -1.0, 4.5, -1.02),
            (0.0, 0.0, 5.0, 2.5),
        ] {
            let p = polar_point(r1, t1).unwrap();
            let q = polar_point(r2, t2).unwrap();
            let before = dist(p, q);
            let after = dist(m.apply(p), m.apply(q));
            assert_close(after, before, 1e-12 * before.max(1.0));
        }
        // Near the rim the *coordinates* themselves carry O(ulp/(1−|z|²))
        // placement noise; invariance still holds to that scale.
        let p = polar_point(12.0, -1.0).unwrap();
        let q = polar_point(14.0, 2.5).unwrap();
        let before = dist(p, q);
        let after = dist(m.apply(p), m.apply(q));
        assert_close(after, before, 1e-9);
    }

    #[test]
    fn bracket_examples_and_radial_identity() {
        let b = BoundaryPoint::new(0.0).unwrap();
        assert_eq!(horocycle_bracket(DiskPoint::origin(), b), 0.0);
        assert_close(horocycle_bracket(pt(0.5, 0.0), b), LN_3, 1e-14);
        assert_close(horocycle_bracket(pt(-0.5, 0.0), b), -LN_3, 1e-14);
        let dir = BoundaryPoint::new(2.2).unwrap();
        for &x in &[-0.9, -0.5, 0.1, 0.97] {
            let p = pt(x * 2.2f64.cos(), x * 2.2f64.sin());
            let signed = ((1.0 + x) / (1.0 - x)).ln();
            assert_close(horocycle_bracket(p, dir), signed, 1e-13);
        }
    }

    #[test]
    fn mobius_basics() {
        let id = MobiusMap::identity();
        let p = pt(0.3, -0.4);
        assert_eq!(id.apply(p), p);

        let m = MobiusMap::translate_to(2.0).unwrap();
        let img = m.apply(DiskPoint::origin());
        assert_close(img.re(), 1.0f64.tanh(), 1e-15);
        assert_close(img.im(), 0.0, 1e-15);

        // Translations fix the ends of their axis.
        let fixed = m.apply_boundary(BoundaryPoint::new(0.0).unwrap());
        assert_close(fixed.angle(), 0.0, 1e-15);

        let r = MobiusMap::rotation(1.0).unwrap();
        let moved = r.apply_boundary(BoundaryPoint::new(0.25).unwrap());
        assert_close(moved.angle(), 1.25, 1e-14);
    }

    #[test]
    fn mobius_group_laws() {
        let f = MobiusMap::translate_to(1.7).unwrap();
        let g = MobiusMap::rotation(0.9).unwrap();
        let h = MobiusMap::translate_to(2.4)
            .unwrap()
            .compose(&MobiusMap::rotation(-2.0).unwrap());

        // Associativity, coefficient-wise.
        let lhs = f.compose(&g).compose(&h);
        let rhs = f.compose(&g.compose(&h));
        let (la, lb) = lhs.coeffs();
        let (ra, rb) = rhs.coeffs();
        assert!((la - ra).norm() < 1e-13 && (lb - rb).norm() < 1e-13);

        // Inverse round-trip on points.
        let p = pt(0.62, 0.31);
        let back = h.inverse().apply(h.apply(p));
        assert!(dist(back, p) < 1e-13);

        // Determinant stays pinned under long chains.
        let mut chain = MobiusMap::identity();
        for k in 0..40 {
            let step = MobiusMap::translate_to(0.3 + 0.01 * k as f64)
                .unwrap()
                .compose(&MobiusMap::rotation(0.2 * k as f64).unwrap());
            chain = chain.compose(&step);
        }
        assert!(chain.su_defect().abs() < 1e-13);
    }

    #[test]
    fn circle_closed_forms() {
        let c = circle_geometry(2.0).unwrap();
        assert_close(c.euclidean_radius, 1.0f64.tanh(), 1e-15);
        let c1 = circle_geometry(1.0).unwrap();
        assert_close(c1.circumference, 7.384006872882645, 1e-14);
        assert_close(c1.area, 3.4122762652849023, 1e-14);
        // 2π(cosh d − 1) and 4π sinh²(d/2) agree.
        let c3 = circle_geometry(3.0).unwrap();
        assert_close(c3.area, TAU * (3.0f64.cosh() - 1.0), 1e-12);
        assert!(circle_geometry(0.0).is_err());
        assert!(circle_geometry(-1.0).is_err());
        assert!(circle_geometry(701.0).is_err());
    }

    #[test]
    fn law_of_cosines_examples() {
        assert_eq!(law_of_cosines(1.0, 1.0, 0.0).unwrap(), 0.0);
        assert_close(law_of_cosines(2.0, 0.7, 0.0).unwrap(), 1.3, 1e-14);
        assert_close(law_of_cosines(1.0, 1.0, PI).unwrap(), 2.0, 1e-14);
        // Equilateral: the vertex angle whose cosine is cosh d/(cosh d + 1)
        // closes the triangle back onto side length d.
        let d = 1.0f64;
        let gamma = (d.cosh() / (d.cosh() + 1.0)).acos();
        assert_close(law_of_cosines(d, d, gamma).unwrap(), d, 1e-13);
    }

    #[test]
    fn law_of_cosines_euclidean_limit() {
        let (a, b, g) = (1e-4, 2e-4, 0.8);
        let hyp = law_of_cosines(a, b, g).unwrap();
        let euc = (a * a + b * b - 2.0 * a * b * g.cos()).sqrt();
        assert!((hyp - euc).abs() / euc < 1e-7);
    }

    #[test]
    fn law_of_cosines_log_branch_is_continuous() {
        let direct = law_of_cosines(300.0, 300.0, 0.37).unwrap();
        let logged = law_of_cosines(300.0 + 1e-10, 300.0 + 1e-10, 0.37).unwrap();
        assert_close(logged, direct, 1e-9);
        // Huge sides stay finite and sane: c ≈ a + b + 2 ln sin(γ/2).
        let big = law_of_cosines(500.0, 450.0, 1.0).unwrap();
        assert_close(big, 950.0 + 2.0 * (0.5f64.sin().ln()), 1e-9);
        assert!(law_of_cosines(-1.0, 1.0, 0.5).is_err());
        assert!(law_of_cosines(1.0, 1.0, PI + 0.1).is_err());
        assert!(law_of_cosines(1.0, f64::NAN, 0.5).is_err());
    }

    #[test]
    fn polar_round_trips() {
        let o = polar_point(0.0, 1.23).unwrap();
        assert_eq!(o, DiskPoint::origin());
        let p = polar_point(2.0, 0.0).unwrap();
        assert_close(p.re(), 1.0f64.tanh(), 1e-15);
        let q = polar_point(7.0, 1.3).unwrap();
        assert_close(dist(DiskPoint::origin(), q), 7.0, 1e-12);
        assert_close(q.im().atan2(q.re()), 1.3, 1e-15);
        assert!(polar_point(-0.1, 0.0).is_err());
    }

    #[test]
    fn polar_distance_agrees_with_disk_distance() {
        let cases = [
            (3.0, 0.4, 2.0, 2.9),
            (0.0, 0.0, 5.0, -1.0),
            (10.0, 0.05, 10.0, 0.06),
        ];
        for &(r1, t1, r2, t2) in &cases {
            let via_polar = dist_polar(r1, t1, r2, t2).unwrap();
            let via_disk = dist(
                polar_point(r1, t1).unwrap(),
                polar_point(r2, t2).unwrap(),
            );
            assert_close(via_polar, via_disk, 1e-11 * via_polar.max(1.0));
        }
        // Antipodal far points: exact doubling, far outside disk resolution.
        assert_close(dist_polar(100.0, 0.0, 100.0, PI).unwrap(), 200.0, 1e-12);
    }

    #[test]
    fn boundary_angle_canonicalisation() {
        assert_close(
            BoundaryPoint::new(7.0 * PI).unwrap().angle(),
            PI,
            1e-14,
        );
        assert_close(BoundaryPoint::new(-0.5).unwrap().angle(), TAU - 0.5, 1e-15);
        assert!(BoundaryPoint::new(TAU).unwrap().angle() < 1e-15);
        assert!(BoundaryPoint::new(f64::INFINITY).is_err());
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert!(DiskPoint::new(1.0, 0.0).is_err());
        assert!(DiskPoint::new(0.8, 0.7).is_err());
        assert!(DiskPoint::new(f64::NAN, 0.0).is_err());
        assert!(MobiusMap::translate_to(-1.0).is_err());
        assert!(MobiusMap::translate_to(701.0).is_err());
        assert!(MobiusMap::rotation(f64::NAN).is_err());
    }
}
