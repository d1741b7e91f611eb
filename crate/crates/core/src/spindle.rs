//! A rigid 7-vertex distance-`d` graph needing 4 colours at every scale.
//!
//! The construction glues two rhombi (each a pair of equilateral
//! triangles with side `d`) at a common hinge vertex and rotates one
//! about the hinge until the two free tips come to distance exactly `d`
//! from each other.  The result is the classic 7-point, 11-edge spindle:
//! odd wheels force 4 colours on any proper colouring, at *every* scale
//! `d` — hyperbolic space, unlike the Euclidean plane, admits the spindle
//! for arbitrarily long edges because equilateral triangles get thin
//! (their vertex angle `α_d = arccos(cosh d/(cosh d + 1))` collapses like
//! `2e^{−d/2}` instead of staying at 60°).
//!
//! All placement happens in hyperbolic polar coordinates, where the
//! required quantities have cancellation-free closed forms.  Each edge is
//! then re-measured: always through the polar law of cosines, and
//! additionally through Poincaré-disk coordinates whenever the layout
//! stays within disk resolution (radius ≤ 14).  The largest discrepancy
//! from `d` over the 11 edges ships with the embedding as
//! `max_deviation` — a numerical certificate, not an article of faith.

use std::collections::BTreeSet;
use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::hypgeo::{
    dist, dist_polar, law_of_cosines, ln_sinh, polar_point, DiskPoint, MAX_DIST,
};

/// Beyond this layout radius, `tanh(r/2)` is within an ulp of 1 and disk
/// coordinates carry more placement noise than the certificate tolerates;
/// the polar certification alone applies there.
const DISK_CHECK_MAX_RADIUS: f64 = 14.0;

/// Vertex order: 0 hinge, 1–2 first rhombus midpoints, 3 first tip,
/// 4–5 second rhombus midpoints, 6 second tip.
pub const SPINDLE_EDGES: [[usize; 2]; 11] = [
    [0, 1],
    [0, 2],
    [1, 2],
    [1, 3],
    [2, 3],
    [0, 4],
    [0, 5],
    [4, 5],
    [4, 6],
    [5, 6],
    [3, 6],
];

/// Vertex angle of the equilateral hyperbolic triangle with side `d`:
/// `α = arccos(cosh d/(cosh d + 1))`, evaluated as
/// `2 arcsin(√(1/(2(cosh d + 1))))` so that neither the `d → 0` limit
/// (`π/3` exactly) nor the large-`d` collapse (`α ≈ 2e^{−d/2}`) loses
/// precision to cancellation.
pub fn equilateral_angle(d: f64) -> Result<f64> {
    if !(d.is_finite() && d > 0.0 && d <= MAX_DIST) {
        return Err(Error::Domain(format!(
            "side length {d} outside (0, {MAX_DIST}]"
        )));
    }
    Ok(2.0 * (0.5 / (d.cosh() + 1.0)).sqrt().asin())
}

// ---------------------------------------------------------------------------
// Small graphs and exact chromatic numbers
// ---------------------------------------------------------------------------

/// An undirected graph on at most 16 vertices with exact colouring search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SmallGraph {
    /// Builds a graph on `n ∈ [1, 16]` vertices; edges are normalised to
    /// `(min, max)` and deduplicated, loops and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("graph needs at least one vertex".into()));
        }
        if n > 16 {
            return Err(Error::GraphTooLarge(n));
        }
        let mut set = BTreeSet::new();
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::Domain(format!(
                    "edge ({i}, {j}) out of range for {n} vertices"
                )));
            }
            if i == j {
                return Err(Error::Domain(format!("loop at vertex {i}")));
            }
            set.insert((i.min(j), i.max(j)));
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Exact chromatic number by canonical backtracking: vertices are
    /// coloured in index order and a branch may introduce at most one
    /// colour not yet used, which kills the `k!` colour-permutation
    /// symmetry.  Instant for anything this type admits.
    pub fn chromatic_number(&self) -> u32 {
        let mut adj = vec![0u16; self.n];
        for &(i, j) in &self.edges {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        for k in 1..=self.n {
            let mut colors = vec![usize::MAX; self.n];
            if self.colorable(&adj, &mut colors, 0, 0, k) {
                return k as u32;
            }
        }
        self.n as u32
    }

    fn colorable(
        &self,
        adj: &[u16],
        colors: &mut [usize],
        v: usize,
        used: usize,
        k: usize,
    ) -> bool {
        if v == self.n {
            return true;
        }
        let ceiling = (used + 1).min(k);
        for c in 0..ceiling {
            let clash = (0..v).any(|u| colors[u] == c && adj[v] & (1 << u) != 0);
            if !clash {
                colors[v] = c;
                if self.colorable(adj, colors, v + 1, used.max(c + 1), k) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// The spindle embedding
// ---------------------------------------------------------------------------

/// A certified embedding of the spindle at scale `d`.
#[derive(Debug, Clone)]
pub struct SpindleEmbedding {
    d: f64,
    alpha: f64,
    leg: f64,
    theta: f64,
    points: [DiskPoint; 7],
    polar: [(f64, f64); 7],
    max_deviation: f64,
}

impl SpindleEmbedding {
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Equilateral vertex angle used by the rhombi.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Hinge-to-tip distance (long rhombus diagonal).
    pub fn leg(&self) -> f64 {
        self.leg
    }

    /// Rotation between the two rhombi bringing the tips to distance `d`.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Disk coordinates, hinge first; beyond layout radius ~38 these
    /// saturate one ulp inside the rim (see [`polar_point`]).
    pub fn points(&self) -> &[DiskPoint; 7] {
        &self.points
    }

    /// Polar coordinates `(r, angle)` of the same vertices — exact at any
    /// scale.
    pub fn polar(&self) -> &[(f64, f64); 7] {
        &self.polar
    }

    pub fn edges(&self) -> [[usize; 2]; 11] {
        SPINDLE_EDGES
    }

    /// Largest `|measured − d|` over the 11 edges, measured through the
    /// polar law of cosines and (within disk resolution) re-measured
    /// through disk coordinates.
    pub fn max_deviation(&self) -> f64 {
        self.max_deviation
    }

    /// The combinatorial spindle; its chromatic number is 4.
    pub fn graph(&self) -> SmallGraph {
        let pairs: Vec<(usize, usize)> = SPINDLE_EDGES.iter().map(|e| (e[0], e[1])).collect();
        SmallGraph::new(7, &pairs).expect("spindle graph is well-formed")
    }

    /// Compact JSON rendering: `d`, the seven `[re, im]` disk points, the
    /// eleven edges, and the certificate value.  Byte-deterministic.
    pub fn to_json(&self) -> String {
        let mut out = String::with_capacity(512);
        out.push_str("{\"d\":");
        out.push_str(&json_num(self.d));
        out.push_str(",\"points\":[");
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('[');
            out.push_str(&json_num(p.re()));
            out.push(',');
            out.push_str(&json_num(p.im()));
            out.push(']');
        }
        out.push_str("],\"edges\":[");
        for (i, e) in SPINDLE_EDGES.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("[{},{}]", e[0], e[1]));
        }
        out.push_str("],\"max_deviation\":");
        out.push_str(&json_num(self.max_deviation));
        out.push('}');
        out
    }
}

/// Shortest-round-trip decimal; switches to exponent form outside
/// `[1e−4, 1e15)` so certificate-sized values stay compact.
fn json_num(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else if x.abs() >= 1e-4 && x.abs() < 1e15 {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Builds the certified spindle at scale `d ∈ (0, 700]`.
///
/// Geometry: with `α` the equilateral angle and `L = loc(d, d, 2α)` the
/// long diagonal, the tips sit at radius `L` and the rotation `θ` solves
/// `1 − cos θ = (cosh d − 1)/sinh² L`, so `dist(t₁, t₂) = d` exactly.
/// `θ` is computed in log space (`θ ~ e^{−d/2}/2` for large `d`, far
/// below underflow thresholds of naive forms) and the infeasibility guard
/// `|cos θ| ≤ 1 + 1e−12` is checked before taking the arcsine.
pub fn build_spindle(d: f64) -> Result<SpindleEmbedding> {
    let alpha = equilateral_angle(d)?; // validates d
    let leg = law_of_cosines(d, d, 2.0 * alpha)?;

    // ln of q = (cosh d − 1)/sinh²L = 2 sinh²(d/2)/sinh²L, then
    // sin²(θ/2) = q/2.
    let ln_q = LN_2 + 2.0 * ln_sinh(0.5 * d) - 2.0 * ln_sinh(leg);
    let half_sin_sq = (ln_q - LN_2).exp();
    if half_sin_sq > 1.0 + 5e-13 {
        // cos θ = 1 − 2 sin²(θ/2) would fall below −1 − 1e−12.
        return Err(Error::Numeric(format!(
            "d = {d}: tip rotation infeasible, sin²(θ/2) = {half_sin_sq}"
        )));
    }
    let theta = 2.0 * half_sin_sq.sqrt().min(1.0).asin();

    let half = 0.5 * theta;
    let half_alpha = 0.5 * alpha;
    let polar: [(f64, f64); 7] = [
        (0.0, 0.0),
        (d, -half + half_alpha),
        (d, -half - half_alpha),
        (leg, -half),
        (d, half + half_alpha),
        (d, half - half_alpha),
        (leg, half),
    ];

    let mut points = [DiskPoint::origin(); 7];
    for (slot, &(r, a)) in points.iter_mut().zip(&polar) {
        *slot = polar_point(r, a)?;
    }

    let use_disk = leg <= DISK_CHECK_MAX_RADIUS;
    let mut max_deviation = 0.0f64;
    for [i, j] in SPINDLE_EDGES {
        let (r1, a1) = polar[i];
        let (r2, a2) = polar[j];
        let via_polar = dist_polar(r1, a1, r2, a2)?;
        max_deviation = max_deviation.max((via_polar - d).abs());
        if use_disk {
            let via_disk = dist(points[i], points[j]);
            max_deviation = max_deviation.max((via_disk - d).abs());
        }
    }

    Ok(SpindleEmbedding {
        d,
        alpha,
        leg,
        theta,
        points,
        polar,
        max_deviation,
    })
}

// ---------------------------------------------------------------------------
