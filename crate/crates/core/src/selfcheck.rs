//! Built-in consistency checks runnable from the command line.
//!
//! Every group exercises an identity that holds exactly in the mathematics
//! and must therefore hold to tight floating-point tolerances in the
//! implementation: agreement of two independent representations of the
//! spherical function, the boundary cocycle identity, invariance of the
//! metric under the isometry group, and the pointwise envelopes of the
//! radial density.  All randomness is seeded, so a run is reproducible.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypgeo::{dist, horocycle_bracket, polar_point, BoundaryPoint, DiskPoint, MobiusMap};
use crate::spherical::{phi, phi_theta, FdProfile, QuadratureConfig};
use crate::Result;

/// Outcome of one check group.
#[derive(Debug, Clone)]
pub struct GroupReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn guard(name: &'static str, run: impl FnOnce() -> Result<GroupReport>) -> GroupReport {
    run().unwrap_or_else(|e| GroupReport {
        name,
        passed: false,
        detail: format!("aborted: {e}"),
    })
}

/// A random isometry written as rotation ∘ translation ∘ rotation, which
/// reaches the whole group.  Translation lengths stay moderate so that
/// image points keep their full coordinate precision.
fn random_map(rng: &mut ChaCha8Rng) -> Result<MobiusMap> {
    let pre = MobiusMap::rotation(rng.random_range(0.0..TAU))?;
    let trans = MobiusMap::translate_to(rng.random_range(0.0..4.0))?;
    let post = MobiusMap::rotation(rng.random_range(0.0..TAU))?;
    Ok(post.compose(&trans).compose(&pre))
}

fn random_point(rng: &mut ChaCha8Rng) -> Result<DiskPoint> {
    polar_point(rng.random_range(0.0..4.0), rng.random_range(0.0..TAU))
}

/// The spherical function computed two independent ways — the radial
/// cosine-transform route and the boundary-integral route — must agree,
/// and the boundary integral must come out real.
pub fn check_spherical_consistency() -> GroupReport {
    const NAME: &str = "spherical-consistency";
    const TOL: f64 = 1e-8;
    guard(NAME, || {
        let quad = QuadratureConfig::default();
        let mut max_gap = 0.0f64;
        let mut max_im = 0.0f64;
        let mut count = 0usize;
        for &d in &[0.5, 1.0, 2.0, 4.0, 8.0] {
            for &lambda in &[0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
                let radial = phi(lambda, d, &quad)?;
                let boundary = phi_theta(lambda, d, &quad)?;
                max_gap = max_gap.max((radial - boundary.re).abs());
                max_im = max_im.max(boundary.im.abs());
                count += 1;
            }
        }
        Ok(GroupReport {
            name: NAME,
            passed: max_gap <= TOL && max_im <= TOL,
            detail: format!(
                "max |radial − boundary| = {max_gap:.3e}, max |Im| = {max_im:.3e} \
                 over {count} (λ, d) pairs (tolerance {TOL:.0e})"
            ),
        })
    })
}

/// The horocycle bracket satisfies
/// `⟨g·p, g·b⟩ = ⟨p, b⟩ + ⟨g·0, g·b⟩` for every isometry `g`; 1000
/// seeded random triples are tested to 1e−10.
pub fn check_boundary_cocycle() -> GroupReport {
    const NAME: &str = "boundary-cocycle";
    const TRIALS: usize = 1000;
    const TOL: f64 = 1e-10;
    guard(NAME, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0001);
        let mut worst = 0.0f64;
        for _ in 0..TRIALS {
            let g = random_map(&mut rng)?;
            let p = random_point(&mut rng)?;
            let b = BoundaryPoint::new(rng.random_range(0.0..TAU))?;
            let lhs = horocycle_bracket(g.apply(p), g.apply_boundary(b));
            let rhs = horocycle_bracket(p, b)
                + horocycle_bracket(g.apply(DiskPoint::origin()), g.apply_boundary(b));
            worst = worst.max((lhs - rhs).abs());
        }
        Ok(GroupReport {
            name: NAME,
            passed: worst <= TOL,
            detail: format!("max defect {worst:.3e} over {TRIALS} trials (tolerance {TOL:.0e})"),
        })
    })
}

/// Distances are invariant under the isometry group; 1000 seeded random
/// pairs and maps are tested to 1e−12 relative.
pub fn check_isometry_invariance() -> GroupReport {
    const NAME: &str = "isometry-invariance";
    const TRIALS: usize = 1000;
    const TOL: f64 = 1e-12;
    guard(NAME, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0002);
        let mut worst = 0.0f64;
        for _ in 0..TRIALS {
            let g = random_map(&mut rng)?;
            let p = random_point(&mut rng)?;
            let q = random_point(&mut rng)?;
            let before = dist(p, q);
            let after = dist(g.apply(p), g.apply(q));
            worst = worst.max((after - before).abs() / before.max(1.0));
        }
        Ok(GroupReport {
            name: NAME,
            passed: worst <= TOL,
            detail: format!(
                "max relative drift {worst:.3e} over {TRIALS} trials (tolerance {TOL:.0e})"
            ),
        })
    })
}

/// The radial density obeys `f_d(v) ≤ √2 (1 − v²)^{−1/2}` pointwise and
/// `f_d(v)/N_d ≤ (1 − v)^{−1/2}` after normalisation; 10⁴ seeded random
/// `(d, v)` pairs are tested, half of them pushed hard against `v = 1`.
pub fn check_density_envelope() -> GroupReport {
    const NAME: &str = "density-envelope";
    const TRIALS: usize = 10_000;
    guard(NAME, || {
        let quad = QuadratureConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0003);
        // Worst observed value of (density / envelope); must stay ≤ 1.
        let mut worst_raw = 0.0f64;
        let mut worst_norm = 0.0f64;
        for trial in 0..TRIALS {
            let d = 10f64.powf(rng.random_range(-3.0..200f64.log10()));
            let one_minus_v = if trial % 2 == 0 {
                1.0 - rng.random_range(0.0..1.0)
            } else {
                10f64.powf(rng.random_range(-14.0..0.0))
            };
            let v = 1.0 - one_minus_v;
            // The envelope must be evaluated at the gap the density itself
            // sees: rounding `1 − one_minus_v` can shift the representable
            // gap by up to half an ulp of 1, which near `v = 1` is a large
            // relative change on both sides of the inequality.
            let gap = 1.0 - v;
            let fd = FdProfile::new(d)?;
            let value = fd.density(v)?;
            let raw_env = (2.0 / (gap * (1.0 + v))).sqrt();
            worst_raw = worst_raw.max(value / raw_env);
            let norm_env = gap.sqrt().recip();
            worst_norm = worst_norm.max(value / fd.normalizer(&quad)? / norm_env);
        }
        let slack = 1.0 + 1e-12;
        Ok(GroupReport {
            name: NAME,
            passed: worst_raw <= slack && worst_norm <= slack,
            detail: format!(
                "max raw ratio {worst_raw:.12}, max normalised ratio {worst_norm:.12} \
                 over {TRIALS} samples (must stay ≤ 1)"
            ),
        })
    })
}

/// Runs every group in a fixed order.
pub fn run_all() -> Vec<GroupReport> {
    vec![
        check_spherical_consistency(),
        check_boundary_cocycle(),
        check_isometry_invariance(),
        check_density_envelope(),
    ]
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_groups_pass() {
        let reports = run_all();
        assert_eq!(reports.len(), 4);
        for r in &reports {
            assert!(r.passed, "{} failed: {}", r.name, r.detail);
            assert!(!r.detail.is_empty());
        }
        let names: Vec<&str> = reports.iter().map(|r| r.name).collect();
        assert_eq!(
            names,
            [
                "spherical-consistency",
                "boundary-cocycle",
                "isometry-invariance",
                "density-envelope"
            ]
        );
    }

    #[test]
    fn reports_are_reproducible() {
        let a = check_boundary_cocycle();
        let b = check_boundary_cocycle();
        assert_eq!(a.detail, b.detail);
        let a = check_isometry_invariance();
        let b = check_isometry_invariance();
        assert_eq!(a.detail, b.detail);
    }
}
