//! Deterministic renderings of sweep results.
//!
//! Both emitters are pure functions of their inputs — no timestamps, no
//! locale, no hash-map iteration — so re-running the same sweep produces
//! byte-identical files.  That property is load-bearing: output artefacts
//! are diffed across runs and machines.

use crate::hoffman::HoffmanResult;

/// Formats `x` with exactly 12 significant digits.
///
/// Values whose decimal exponent lies in `[−4, 11]` are written
/// positionally (trailing zeros kept, so columns stay aligned); anything
/// else uses exponent form with a 12-digit mantissa.  The output parses
/// back to within half a unit in the last printed digit — at most
/// `5×10⁻¹²` relative.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let neg = x < 0.0;
    let sci = format!("{:.11e}", x.abs());
    let (mant, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("numeric exponent");
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 12);
    let body = if (-4..12).contains(&exp) {
        if exp >= 0 {
            let k = exp as usize + 1;
            if k == digits.len() {
                digits
            } else {
                format!("{}.{}", &digits[..k], &digits[k..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        }
    } else {
        format!("{}.{}e{}", &digits[..1], &digits[1..], exp)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// CSV with header `d,psi_min,s_star,bound`, one row per result, LF line
/// endings, 12 significant digits throughout.
pub fn csv_report(results: &[HoffmanResult]) -> String {
    let mut out = String::from("d,psi_min,s_star,bound\n");
    for r in results {
        out.push_str(&format_sig12(r.d));
        out.push(',');
        out.push_str(&format_sig12(r.psi_min));
        out.push(',');
        out.push_str(&format_sig12(r.s_star));
        out.push(',');
        out.push_str(&format_sig12(r.bound));
        out.push('\n');
    }
    out
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-" {
        "0".into()
    } else {
        s.into()
    }
}

/// An 800×500 SVG line chart of `bound` against `d` with the `d → ∞`
/// asymptote drawn dashed.  Layout and formatting are fixed; equal inputs
/// give equal bytes.
pub fn svg_chart(results: &[HoffmanResult], limit: f64) -> String {
    const W: f64 = 800.0;
    const H: f64 = 500.0;
    const L: f64 = 70.0;
    const R: f64 = 775.0;
    const T: f64 = 25.0;
    const B: f64 = 450.0;

    let (mut d_lo, mut d_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_lo, mut y_hi) = (limit, limit);
    for r in results {
        d_lo = d_lo.min(r.d);
        d_hi = d_hi.max(r.d);
        y_lo = y_lo.min(r.bound);
        y_hi = y_hi.max(r.bound);
    }
    if results.is_empty() {
        d_lo = 0.0;
        d_hi = 1.0;
    }
    if d_hi - d_lo < 1e-12 {
        d_lo -= 0.5;
        d_hi += 0.5;
    }
    let pad = 0.05 * (y_hi - y_lo).max(0.2);
    y_lo -= pad;
    y_hi += pad;

    let sx = |d: f64| L + (d - d_lo) / (d_hi - d_lo) * (R - L);
    let sy = |y: f64| B - (y - y_lo) / (y_hi - y_lo) * (B - T);

    let mut svg = String::with_capacity(4096);
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
         viewBox=\"0 0 {W} {H}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Axes.
    svg.push_str(&format!(
        "<line x1=\"{L}\" y1=\"{B}\" x2=\"{R}\" y2=\"{B}\" stroke=\"black\"/>\n"
    ));
    svg.push_str(&format!(
        "<line x1=\"{L}\" y1=\"{T}\" x2=\"{L}\" y2=\"{B}\" stroke=\"black\"/>\n"
    ));

    // Ticks and labels.
    for i in 0..=5 {
        let f = i as f64 / 5.0;
        let d = d_lo + f * (d_hi - d_lo);
        let x = sx(d);
        svg.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{B}\" x2=\"{x:.2}\" y2=\"{}\" stroke=\"black\"/>\n",
            B + 6.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" \
             text-anchor=\"middle\">{}</text>\n",
            B + 20.0,
            tick_label(d)
        ));
        let y_val = y_lo + f * (y_hi - y_lo);
        let y = sy(y_val);
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{y:.2}\" x2=\"{L}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            L - 6.0
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" \
             text-anchor=\"end\">{}</text>\n",
            L - 10.0,
            y + 4.0,
            tick_label(y_val)
        ));
    }

    // Axis titles.
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{}\" font-family=\"monospace\" font-size=\"13\" \
         text-anchor=\"middle\">d</text>\n",
        0.5 * (L + R),
        H - 10.0
    ));
    svg.push_str(&format!(
        "<text x=\"18\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"13\" \
         text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">chromatic lower bound</text>\n",
        0.5 * (T + B),
        0.5 * (T + B)
    ));

    // Asymptote.
    let ly = sy(limit);
    svg.push_str(&format!(
        "<line x1=\"{L}\" y1=\"{ly:.2}\" x2=\"{R}\" y2=\"{ly:.2}\" stroke=\"gray\" \
         stroke-dasharray=\"6,4\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" \
         text-anchor=\"end\" fill=\"gray\">limit {}</text>\n",
        R - 4.0,
        ly - 6.0,
        tick_label(limit)
    ));

    // The bound curve.
    if !results.is_empty() {
        svg.push_str("<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"");
        for (i, r) in results.iter().enumerate() {
            if i > 0 {
                svg.push(' ');
            }
            svg.push_str(&format!("{:.2},{:.2}", sx(r.d), sy(r.bound)));
        }
        svg.push_str("\"/>\n");
    }
    svg.push_str("</svg>\n");
    svg
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn result(d: f64, psi_min: f64, s_star: f64, bound: f64) -> HoffmanResult {
        HoffmanResult {
            d,
            psi_min,
            s_star,
            bound,
            spectrum_sup: None,
            spectrum_inf: None,
        }
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_sig12(1.0), "1.00000000000");
        assert_eq!(format_sig12(0.05), "0.0500000000000");
        assert_eq!(format_sig12(-0.21723362821122166), "-0.217233628211");
        assert_eq!(format_sig12(4.4934094579090642), "4.49340945791");
        assert_eq!(format_sig12(123456789012345.0), "1.23456789012e14");
        assert_eq!(format_sig12(1e-12), "1.00000000000e-12");
        assert_eq!(format_sig12(0.0), "0.00000000000");
        assert_eq!(format_sig12(-2.0), "-2.00000000000");
    }

    #[test]
    fn formatting_round_trips_to_half_a_last_digit() {
        let values = [
            5.6033388487517004,
            -0.39481436495326846,
            3.8420716434491761,
            2.2204460492503131e-16,
            699.99999999999,
            1.0000000000000002,
        ];
        for &v in &values {
            let back: f64 = format_sig12(v).parse().unwrap();
            assert!(
                (back - v).abs() <= v.abs() * 5.1e-12,
                "{v:e} -> {} -> {back:e}",
                format_sig12(v)
            );
        }
    }

    #[test]
    fn csv_shape() {
        let rows = [
            result(1.0, -0.39481436495326846, 3.8420716434491761, 3.5328359066123730),
            result(2.0, -0.37525227181192893, 3.8683386197874346, 3.6648739397937228),
        ];
        let csv = csv_report(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "d,psi_min,s_star,bound");
        assert_eq!(
            lines[1],
            "1.00000000000,-0.394814364953,3.84207164345,3.53283590661"
        );
        assert!(csv.ends_with('\n'));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn svg_is_deterministic_and_structured() {
        let rows: Vec<HoffmanResult> = (1..=20)
            .map(|i| {
                let d = i as f64;
                result(d, -0.3, 4.0, 5.6 - 2.0 / (d + 1.0))
            })
            .collect();
        let a = svg_chart(&rows, 5.6033388487517004);
        let b = svg_chart(&rows, 5.6033388487517004);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains("polyline"));
        assert!(a.contains("stroke-dasharray"));
        assert!(a.trim_end().ends_with("</svg>"));
        // One polyline point per result.
        let pts = a
            .split("points=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap();
        assert_eq!(pts.split(' ').count(), rows.len());
        // Degenerate inputs still render.
        let single = svg_chart(&rows[..1], 5.6);
        assert!(single.contains("polyline"));
        let empty = svg_chart(&[], 5.6);
        assert!(empty.starts_with("<svg"));
    }
}
