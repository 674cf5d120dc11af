//! Deterministic SVG 1.1 output: projected polylines with a view box that
//! fits all plotted points with a 5% margin.
//!
//! The isometric projection is fixed (no camera inference):
//!
//! ```text
//! u = (sqrt(3)/2) (x1 - x2)
//! v = (x1 + x2)/2 - x3        (SVG y grows downward)
//! ```
//!
//! The axis-aligned alternative maps (x1, -x2). Coordinates are written
//! with six decimals, so identical inputs produce identical bytes.

use crate::config::Projection;
use conecurve::lorentz::LorentzVector;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

pub fn project(projection: Projection, p: &LorentzVector) -> (f64, f64) {
    match projection {
        Projection::Iso => (SQRT3_2 * (p.x1 - p.x2), 0.5 * (p.x1 + p.x2) - p.x3),
        Projection::Xy => (p.x1, -p.x2),
    }
}

pub fn projection_desc(projection: Projection) -> &'static str {
    match projection {
        Projection::Iso => "iso: u=(sqrt3/2)(x1-x2) v=(x1+x2)/2-x3",
        Projection::Xy => "xy-plane: u=x1 v=-x2",
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

/// Render polylines (already projected) into a standalone SVG document.
/// `desc` records the run parameters; empty polylines are skipped.
pub fn polyline_svg(desc: &str, polylines: &[Vec<(f64, f64)>]) -> String {
    let points: Vec<(f64, f64)> = polylines.iter().flatten().copied().collect();
    let (mut min_u, mut max_u) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_v, mut max_v) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(u, v) in &points {
        min_u = min_u.min(u);
        max_u = max_u.max(u);
        min_v = min_v.min(v);
        max_v = max_v.max(v);
    }
    if points.is_empty() {
        (min_u, max_u, min_v, max_v) = (0.0, 1.0, 0.0, 1.0);
    }
    let w = (max_u - min_u).max(1e-9);
    let h = (max_v - min_v).max(1e-9);
    let margin_u = 0.05 * w;
    let margin_v = 0.05 * h;
    let view = format!(
        "{} {} {} {}",
        fmt(min_u - margin_u),
        fmt(min_v - margin_v),
        fmt(w + 2.0 * margin_u),
        fmt(h + 2.0 * margin_v)
    );
    let stroke = 0.005 * w.max(h);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{view}\">\n"
    ));
    out.push_str(&format!("<desc>{desc}</desc>\n"));
    for line in polylines {
        if line.is_empty() {
            continue;
        }
        let mut d = String::new();
        for (i, (u, v)) in line.iter().enumerate() {
            d.push_str(if i == 0 { "M " } else { " L " });
            d.push_str(&fmt(*u));
            d.push(' ');
            d.push_str(&fmt(*v));
        }
        out.push_str(&format!(
            "<path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>\n",
            fmt(stroke)
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Parse the view box back out of a rendered document (test support).
pub fn parse_viewbox(svg: &str) -> Option<[f64; 4]> {
    let start = svg.find("viewBox=\"")? + "viewBox=\"".len();
    let end = svg[start..].find('"')? + start;
    let vals: Vec<f64> = svg[start..end]
        .split_whitespace()
        .map(|t| t.parse().ok())
        .collect::<Option<_>>()?;
    vals.try_into().ok()
}
