//! SVG figures: regions, dashed straight-line baseline, graph-only path and
//! refined path, start/end markers and a legend.

use std::fmt::Write;

use crate::geometry::Point;
use crate::scenario::{PathSolution, Scenario};

const WIDTH: f64 = 800.0;
const LEGEND_HEIGHT: f64 = 70.0;
const GRAPH_COLOR: &str = "#1f5fbf";
const REFINED_COLOR: &str = "#c8302a";
const BASELINE_COLOR: &str = "#555555";

struct Frame {
    min: Point,
    scale: f64,
    height: f64,
    pad: f64,
}

impl Frame {
    fn new(points: impl Iterator<Item = Point>) -> Frame {
        let (mut lo, mut hi) = (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let pad = 20.0;
        let scale = (WIDTH - 2.0 * pad) / span;
        let height = (hi.y - lo.y).max(span * 0.25) * scale + 2.0 * pad;
        Frame {
            min: lo,
            scale,
            height,
            pad,
        }
    }

    /// Maps to SVG pixels with the y axis pointing up.
    fn map(&self, p: Point) -> (f64, f64) {
        (
            self.pad + (p.x - self.min.x) * self.scale,
            self.height - self.pad - (p.y - self.min.y) * self.scale,
        )
    }

    fn points_attr(&self, pts: &[Point]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.4},{y:.4}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Renders a scenario with optional graph-only and refined paths. Output is
/// a pure function of the inputs. Straight-line solutions are drawn only as
/// the baseline.
pub fn render_svg(scn: &Scenario, graph: Option<&PathSolution>, refined: Option<&PathSolution>) -> String {
    let paths = [graph, refined];
    let frame = Frame::new(
        [scn.start, scn.end]
            .into_iter()
            .chain(scn.polytopes.iter().flat_map(|p| p.vertices().iter().copied()))
            .chain(paths.iter().flatten().flat_map(|s| s.waypoints.iter().copied())),
    );
    let total_height = frame.height + LEGEND_HEIGHT;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{total_height:.4}" viewBox="0 0 {WIDTH:.0} {total_height:.4}">"#
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{WIDTH:.0}" height="{total_height:.4}" fill="white"/>"#);

    out.push_str("<g id=\"regions\">\n");
    for poly in &scn.polytopes {
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="#f2d16b" fill-opacity="0.7" stroke="#a08020" stroke-width="1"/>"##,
            frame.points_attr(poly.vertices())
        );
    }
    out.push_str("</g>\n");

    let (sx, sy) = frame.map(scn.start);
    let (ex, ey) = frame.map(scn.end);
    let _ = writeln!(
        out,
        r#"<line x1="{sx:.4}" y1="{sy:.4}" x2="{ex:.4}" y2="{ey:.4}" stroke="{BASELINE_COLOR}" stroke-width="1.5" stroke-dasharray="6,4"/>"#
    );
    for (sol, color, width) in [(graph, GRAPH_COLOR, 2.0), (refined, REFINED_COLOR, 2.5)] {
        if let Some(sol) = sol.filter(|s| !s.sequence.is_empty() || s.waypoints.len() > 2) {
            let _ = writeln!(
                out,
                r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="{width:.1}" stroke-linejoin="round"/>"#,
                frame.points_attr(&sol.waypoints)
            );
        }
    }
    let _ = writeln!(out, r#"<circle cx="{sx:.4}" cy="{sy:.4}" r="5" fill="black"/>"#);
    let _ = writeln!(out, r#"<circle cx="{ex:.4}" cy="{ey:.4}" r="5" fill="white" stroke="black" stroke-width="2"/>"#);

    out.push_str("<g id=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n");
    let y0 = frame.height + 10.0;
    let entries = [
        (BASELINE_COLOR, "straight line".to_string()),
        (GRAPH_COLOR, label("graph path", graph)),
        (REFINED_COLOR, label("refined path", refined)),
    ];
    for (i, (color, text)) in entries.iter().enumerate() {
        let y = y0 + 18.0 * i as f64;
        let _ = writeln!(out, r#"<rect x="20" y="{y:.4}" width="24" height="4" fill="{color}"/>"#);
        let _ = writeln!(out, r#"<text x="52" y="{:.4}">{text}</text>"#, y + 6.0);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn label(name: &str, sol: Option<&PathSolution>) -> String {
    match sol {
        Some(s) => format!("{name} ({:.4})", s.total_length),
        None => name.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::DEFAULT_TOL;

    #[test]
    fn empty_scene_has_markers_and_baseline() {
        let scn = Scenario::new(Point::new(0.0, 0.0), Point::new(2.0, 1.0), 3.0, vec![], 4, DEFAULT_TOL).unwrap();
        let sol = PathSolution::straight_line(&scn);
        let svg = render_svg(&scn, None, Some(&sol));
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<polyline").count(), 0);
        assert_eq!(svg.matches("<polygon").count(), 0);
        assert_eq!(svg, render_svg(&scn, None, Some(&sol)));
    }

    #[test]
    fn y_axis_points_up() {
        let scn = Scenario::new(Point::new(0.0, 0.0), Point::new(0.0, 5.0), 3.0, vec![], 4, DEFAULT_TOL).unwrap();
        let frame = Frame::new([scn.start, scn.end].into_iter());
        assert!(frame.map(scn.end).1 < frame.map(scn.start).1);
    }
}
