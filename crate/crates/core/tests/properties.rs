//! Randomised property tests: algebraic identities of the geometry layer,
//! analytic facts about the density and its transform, and cross-checks of
//! the production quadrature against an unrelated reference rule.

mod common;

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use proptest::prelude::*;

use hypchroma::hoffman::limit_constants;
use hypchroma::hypgeo::{
    circle_geometry, dist, dist_polar, horocycle_bracket, law_of_cosines, polar_point,
    BoundaryPoint, DiskPoint, MobiusMap,
};
use hypchroma::report::format_sig12;
use hypchroma::spherical::{FdProfile, QuadratureConfig, SpectralProfile};
use hypchroma::spindle::{build_spindle, equilateral_angle};

fn quad() -> QuadratureConfig {
    QuadratureConfig::default()
}

/// A general isometry as rotation ∘ translation ∘ rotation.
fn isometry(pre: f64, shift: f64, post: f64) -> MobiusMap {
    MobiusMap::rotation(post)
        .unwrap()
        .compose(&MobiusMap::translate_to(shift).unwrap())
        .compose(&MobiusMap::rotation(pre).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    // ----------------------------------------------------------------- //
    // Geometry                                                          //
    // ----------------------------------------------------------------- //

    #[test]
    fn distances_survive_isometries(
        r1 in 0.0..4.0f64, t1 in 0.0..TAU,
        r2 in 0.0..4.0f64, t2 in 0.0..TAU,
        pre in 0.0..TAU, shift in 0.0..4.0f64, post in 0.0..TAU,
    ) {
        let p = polar_point(r1, t1).unwrap();
        let q = polar_point(r2, t2).unwrap();
        let g = isometry(pre, shift, post);
        let before = dist(p, q);
        let after = dist(g.apply(p), g.apply(q));
        prop_assert!((after - before).abs() <= 1e-12 * before.max(1.0));
    }

    #[test]
    fn horocycle_bracket_is_a_cocycle(
        r in 0.0..4.0f64, t in 0.0..TAU, beta in 0.0..TAU,
        pre in 0.0..TAU, shift in 0.0..4.0f64, post in 0.0..TAU,
    ) {
        let p = polar_point(r, t).unwrap();
        let b = BoundaryPoint::new(beta).unwrap();
        let g = isometry(pre, shift, post);
        let lhs = horocycle_bracket(g.apply(p), g.apply_boundary(b));
        let rhs = horocycle_bracket(p, b)
            + horocycle_bracket(g.apply(DiskPoint::origin()), g.apply_boundary(b));
        prop_assert!((lhs - rhs).abs() <= 1e-10);
    }

    #[test]
    fn bracket_vanishes_at_the_origin(beta in 0.0..TAU) {
        let b = BoundaryPoint::new(beta).unwrap();
        prop_assert!(horocycle_bracket(DiskPoint::origin(), b).abs() <= 1e-15);
    }

    #[test]
    fn inverse_undoes_a_map(
        r in 0.0..4.0f64, t in 0.0..TAU,
        pre in 0.0..TAU, shift in 0.0..4.0f64, post in 0.0..TAU,
    ) {
        let p = polar_point(r, t).unwrap();
        let g = isometry(pre, shift, post);
        let round_trip = g.inverse().apply(g.apply(p));
        prop_assert!(dist(p, round_trip) <= 1e-12);
        prop_assert!(g.su_defect() <= 1e-13);
        prop_assert!(g.compose(&g.inverse()).su_defect() <= 1e-13);
    }

    #[test]
    fn polar_and_cartesian_distances_agree(
        r1 in 0.0..6.0f64, t1 in 0.0..TAU,
        r2 in 0.0..6.0f64, t2 in 0.0..TAU,
    ) {
        let via_disk = dist(polar_point(r1, t1).unwrap(), polar_point(r2, t2).unwrap());
        let via_polar = dist_polar(r1, t1, r2, t2).unwrap();
        prop_assert!((via_disk - via_polar).abs() <= 1e-11 * via_polar.max(1.0));
    }

    #[test]
    fn chords_obey_triangle_bounds(
        a in 0.0..300.0f64, b in 0.0..300.0f64, gamma in 0.0..PI,
    ) {
        let c = law_of_cosines(a, b, gamma).unwrap();
        prop_assert!(c <= a + b + 1e-9);
        prop_assert!(c >= (a - b).abs() - 1e-9);
        // γ = π degenerates to the sum, γ = 0 to the difference.
        let flat = law_of_cosines(a, b, PI).unwrap();
        prop_assert!((flat - (a + b)).abs() <= 1e-9 * (a + b).max(1.0));
        let folded = law_of_cosines(a, b, 0.0).unwrap();
        prop_assert!((folded - (a - b).abs()).abs() <= 1e-9 * (a + b).max(1.0));
    }

    #[test]
    fn small_triangles_are_euclidean(
        a in 1e-6..1e-4f64, b in 1e-6..1e-4f64, gamma in 0.0..PI,
    ) {
        let hyperbolic = law_of_cosines(a, b, gamma).unwrap();
        let euclidean = (a * a + b * b - 2.0 * a * b * gamma.cos()).max(0.0).sqrt();
        prop_assert!((hyperbolic - euclidean).abs() <= 1e-8 * euclidean.max(a.max(b)));
    }

    #[test]
    fn small_circles_are_euclidean(d in 1e-6..1e-3f64) {
        let geo = circle_geometry(d).unwrap();
        // Leading corrections: circumference 2π sinh d − 2πd = (π/3)d³ + …,
        // area 2π(cosh d − 1) − πd² = (π/12)d⁴ + ….
        prop_assert!((geo.circumference - TAU * d).abs() <= 1.1 * d * d * d);
        prop_assert!((geo.area - PI * d * d).abs() <= 0.3 * d * d * d * d);
    }

    // ----------------------------------------------------------------- //
    // Density and transform                                             //
    // ----------------------------------------------------------------- //

    #[test]
    fn density_envelopes_hold(d in 1e-4..200.0f64, v in 0.0..1.0f64) {
        let fd = FdProfile::new(d).unwrap();
        let gap = 1.0 - v;
        let value = fd.density(v).unwrap();
        prop_assert!(value * (gap * (1.0 + v) / 2.0).sqrt() <= 1.0 + 1e-12);
        let n = fd.normalizer(&quad()).unwrap();
        prop_assert!(value / n * gap.sqrt() <= 1.0 + 1e-12);
    }

    #[test]
    fn transform_is_even_and_bounded(d in 0.05..80.0f64, s in 0.0..50.0f64) {
        let sp = SpectralProfile::new(FdProfile::new(d).unwrap(), quad()).unwrap();
        let plus = sp.psi(s).unwrap();
        let minus = sp.psi(-s).unwrap();
        prop_assert_eq!(plus.to_bits(), minus.to_bits());
        prop_assert!(plus.abs() <= 1.0 + 1e-12);
        prop_assert!((sp.psi(0.0).unwrap() - 1.0).abs() == 0.0);
    }

    #[test]
    fn production_quadrature_matches_reference_rule(d in 0.01..60.0f64) {
        // Total density mass two ways: the production Gauss–Legendre
        // machinery on ∫₀¹ f_d(v) dv, and an unrelated tanh–sinh rule on
        // the unscaled form ∫₀^d du/√(cosh d − cosh u) (substituting
        // u = dv), its endpoint gap supplied exactly (see tests/common).
        let fd = FdProfile::new(d).unwrap();
        let production = fd.normalizer(&quad()).unwrap();
        let reference = common::tanh_sinh(
            &|u, _, gap| {
                (2.0 * (0.5 * (d + u)).sinh() * (0.5 * gap).sinh()).sqrt().recip()
            },
            0.0,
            d,
            1e-13,
        );
        prop_assert!(
            (production - reference).abs() <= 1e-10 * production.abs(),
            "d = {}: production {:e} vs reference {:e}", d, production, reference
        );
    }

    #[test]
    fn scans_match_single_evaluations(
        d in 0.1..40.0f64, start in 0.0..4.0f64, step in 0.01..0.3f64,
    ) {
        let sp = SpectralProfile::new(FdProfile::new(d).unwrap(), quad()).unwrap();
        let grid = sp.scan_uniform(start, step, 24).unwrap();
        for (j, &g) in grid.iter().enumerate() {
            let single = sp.psi(start + step * j as f64).unwrap();
            prop_assert!((g - single).abs() <= 1e-9);
        }
    }

    // ----------------------------------------------------------------- //
    // Spindle                                                           //
    // ----------------------------------------------------------------- //

    #[test]
    fn spindles_certify_across_scales(d in 0.05..20.0f64) {
        let emb = build_spindle(d).unwrap();
        prop_assert!(emb.max_deviation() < 1e-9);
        // The apex angle construction: 2 sin²(α/2) (cosh d + 1) = 1.
        let alpha = equilateral_angle(d).unwrap();
        let lhs = 2.0 * (0.5 * alpha).sin().powi(2) * (d.cosh() + 1.0);
        prop_assert!((lhs - 1.0).abs() <= 1e-12);
        prop_assert!((emb.alpha() - alpha).abs() == 0.0);
    }

    // ----------------------------------------------------------------- //
    // Reporting                                                         //
    // ----------------------------------------------------------------- //

    #[test]
    fn formatted_values_round_trip(mantissa in -10.0..10.0f64, exp in -30i32..30) {
        let x = mantissa * 10f64.powi(exp);
        let back: f64 = format_sig12(x).parse().unwrap();
        prop_assert!((back - x).abs() <= x.abs() * 5.1e-12);
    }
}

// Non-proptest spot checks that belong with these suites.

#[test]
fn limit_is_a_fixed_point_of_its_defining_equations() {
    let c = limit_constants(1e-9).unwrap();
    assert!((c.rho.tan() - c.rho).abs() < 1e-11 * c.rho);
    assert!((c.nu - c.rho.cos()).abs() < 1e-12);
    assert!((c.limit - (1.0 - 1.0 / c.nu)).abs() < 1e-12);
    assert!(c.rho > PI && c.rho < 1.5 * PI);
    assert!(c.nu < 0.0);
}

#[test]
fn boundary_points_land_on_the_circle() {
    for k in 0..16 {
        let b = BoundaryPoint::new(k as f64 * TAU / 16.0 - PI).unwrap();
        let unit: Complex64 = b.unit();
        assert!((unit.norm() - 1.0).abs() <= 1e-15);
        assert!((0.0..TAU).contains(&b.angle()));
    }
}
