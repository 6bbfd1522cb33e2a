//! SVG rendering of plans.
//!
//! Rendering is the only place floating point appears. The equilateral
//! frame applies `(x, y) -> (x + y/2, y * sqrt(3)/2)` to every vertex.

use std::fmt::Write as _;

use crate::geometry::{CoveringPlan, Orientation, Point2};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Frame {
    #[default]
    Simplex,
    Equilateral,
}

#[derive(Clone, Copy, Debug)]
pub struct RenderOptions {
    pub frame: Frame,
    pub show_target: bool,
    pub row_labels: bool,
    /// Pixels per unit length.
    pub scale: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            frame: Frame::Simplex,
            show_target: true,
            row_labels: false,
            scale: 80.0,
        }
    }
}

const UP_FILL: &str = "#7fa7d9";
const DOWN_FILL: &str = "#f0a35e";

/// Maps a canonical-frame point into display coordinates (y still points up).
pub fn display_point(frame: Frame, p: &Point2) -> (f64, f64) {
    let (x, y) = (p.x.to_f64(), p.y.to_f64());
    match frame {
        Frame::Simplex => (x, y),
        Frame::Equilateral => (x + y / 2.0, y * 3f64.sqrt() / 2.0),
    }
}

fn polygon_points(points: &[(f64, f64)], to_px: impl Fn(f64, f64) -> (f64, f64)) -> String {
    points
        .iter()
        .map(|&(x, y)| {
            let (px, py) = to_px(x, y);
            format!("{px:.3},{py:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_svg(plan: &CoveringPlan, options: &RenderOptions) -> String {
    let frame = options.frame;
    let target = plan.target();
    let target_pts: Vec<(f64, f64)> = target
        .vertices()
        .iter()
        .map(|p| display_point(frame, p))
        .collect();
    let triangles: Vec<(Orientation, Vec<(f64, f64)>)> = plan
        .placements
        .iter()
        .map(|p| {
            let pts = p
                .vertices()
                .iter()
                .map(|v| display_point(frame, v))
                .collect();
            (p.orientation, pts)
        })
        .collect();

    let all = triangles
        .iter()
        .flat_map(|(_, pts)| pts.iter())
        .chain(target_pts.iter());
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (0f64, 0f64, 1f64, 1f64);
    for &(x, y) in all {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let margin = if options.row_labels { 1.0 } else { 0.25 };
    let s = options.scale;
    let width = (max_x - min_x + 2.0 * margin) * s;
    let height = (max_y - min_y + 2.0 * margin) * s;
    let to_px = |x: f64, y: f64| ((x - min_x + margin) * s, (max_y - y + margin) * s);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(
        out,
        "  <title>n={} d={} method={} count={}</title>",
        plan.n,
        plan.d,
        plan.method,
        plan.count()
    );
    let _ = writeln!(
        out,
        r##"  <g stroke="#333333" stroke-width="1" fill-opacity="0.55">"##
    );
    for (orientation, pts) in &triangles {
        let (class, fill) = match orientation {
            Orientation::Up => ("up", UP_FILL),
            Orientation::Down => ("down", DOWN_FILL),
        };
        let _ = writeln!(
            out,
            r#"    <polygon class="{class}" fill="{fill}" points="{}"/>"#,
            polygon_points(pts, to_px)
        );
    }
    let _ = writeln!(out, "  </g>");
    if options.show_target {
        let _ = writeln!(
            out,
            r##"  <polygon class="target" fill="none" stroke="#000000" stroke-width="2.5" points="{}"/>"##,
            polygon_points(&target_pts, to_px)
        );
    }
    if options.row_labels {
        let mut bases: Vec<&Rational> = plan
            .placements
            .iter()
            .filter(|p| p.is_up())
            .map(|p| p.leg_y())
            .collect();
        bases.sort();
        bases.dedup();
        for (row, base) in bases.iter().rev().enumerate() {
            let anchor = Point2::new(Rational::zero(), (*base).clone() + Rational::new(1, 2));
            let (x, y) = display_point(frame, &anchor);
            let (px, py) = to_px(x - 0.6, y);
            let _ = writeln!(
                out,
                r#"  <text class="row-label" x="{px:.3}" y="{py:.3}" font-family="sans-serif" font-size="{:.1}" text-anchor="middle">{}</text>"#,
                s * 0.3,
                row + 1
            );
        }
    }
    let _ = writeln!(out, "</svg>");
    out
}
