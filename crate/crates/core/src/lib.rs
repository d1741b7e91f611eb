//! Spectral lower bounds for colouring hyperbolic distance graphs.
//!
//! Two points of the hyperbolic plane (curvature −1) are joined whenever
//! they lie at distance exactly `d`.  Any measurable proper colouring of
//! that graph needs at least `1 − M/m` colours, where `M > 0` and `m < 0`
//! are the extreme values that radial eigenfunctions of the hyperbolic
//! Laplacian take against the distance-`d` sphere.  This crate evaluates
//! that bound:
//!
//! * [`hypgeo`] — exact-formula geometry on the Poincaré disk: distances,
//!   orientation-preserving isometries, horocycle brackets, hyperbolic
//!   law of cosines.
//! * [`spherical`] — the radial density `f_d`, its cosine transform, and
//!   two independent integral representations of the spherical function
//!   `φ_λ` evaluated at distance `d`.
//! * [`hoffman`] — minimisation of the transform over frequencies, the
//!   resulting `1 − 1/ψ_min` bound, sweeps over `d`, and the `d → ∞`
//!   limiting constants (`≈ 5.6033` colours).
//! * [`spindle`] — a rigid 7-vertex unit-distance graph embedded at scale
//!   `d` with certified edge lengths, witnessing the elementary lower
//!   bound of 4 colours at every scale.
//! * [`report`] — deterministic CSV/SVG renderings of sweep results.
//! * [`selfcheck`] — the randomised consistency suite behind the CLI's
//!   `check` subcommand.
//!
//! Distances throughout are hyperbolic, with the curvature normalised to
//! −1.  Every fallible operation returns [`error::Error`]; numerical
//! routines never silently degrade — quadratures that cannot reach their
//! tolerance and searches that find nothing report failure instead.

pub mod error;
pub mod hoffman;
pub mod hypgeo;
pub mod report;
pub mod selfcheck;
pub mod spherical;
pub mod spindle;

pub use error::{Error, Result};
