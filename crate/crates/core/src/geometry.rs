//! Planar convex-polytope primitives.
//!
//! Polytopes are stored in both half-space form (`H x <= h`) and as a
//! counter-clockwise vertex loop. Every predicate takes an explicit
//! tolerance so callers decide how strict a boundary test is.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default containment tolerance, in scenario distance units.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("polytope needs at least 3 half-spaces, got {0}")]
    TooFewConstraints(usize),
    #[error("half-space matrix has {rows} rows but offset vector has {offsets}")]
    ShapeMismatch { rows: usize, offsets: usize },
    #[error("polytope is unbounded (recession direction ({dx:.3}, {dy:.3}))")]
    UnboundedPolytope { dx: f64, dy: f64 },
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("polytope has empty interior (area {area:e})")]
    DegeneratePolytope { area: f64 },
    #[error("non-finite coordinate in polytope data")]
    NonFinite,
}

/// A point (or vector) in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
}

impl Segment {
    pub fn new(start: Point, end: Point) -> Self {
        Segment { start, end }
    }

    pub fn length(&self) -> f64 {
        self.start.distance(self.end)
    }

    /// Euclidean distance from `p` to the closed segment.
    pub fn distance_to(&self, p: Point) -> f64 {
        let d = self.end - self.start;
        let len2 = d.dot(d);
        if len2 == 0.0 {
            return p.distance(self.start);
        }
        let t = ((p - self.start).dot(d) / len2).clamp(0.0, 1.0);
        p.distance(self.start + d * t)
    }
}

/// Which representation a polytope was originally supplied in. Serialization
/// writes the same form back so a load/save round trip is lossless.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    Vertices,
    HalfSpaces,
}

/// Bounded convex polygon with nonempty interior, `{x : H x <= h}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope {
    id: usize,
    normals: Vec<Point>,
    offsets: Vec<f64>,
    vertices: Vec<Point>,
    repr: Representation,
}

impl Polytope {
    /// Builds a polytope from half-space rows `normals[r] . x <= offsets[r]`.
    /// Rows are kept exactly as given; redundant rows are allowed.
    pub fn from_halfspaces(
        id: usize,
        normals: Vec<Point>,
        offsets: Vec<f64>,
        tol: f64,
    ) -> Result<Self, GeometryError> {
        let vertices = enumerate_vertices(&normals, &offsets, tol)?;
        Ok(Polytope {
            id,
            normals,
            offsets,
            vertices,
            repr: Representation::HalfSpaces,
        })
    }

    /// Builds a polytope as the convex hull of `points`. One unit-normal row
    /// is produced per hull edge.
    pub fn from_vertices(id: usize, points: &[Point], tol: f64) -> Result<Self, GeometryError> {
        if points.iter().any(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let hull = convex_hull(points, tol);
        let area = polygon_area(&hull);
        if hull.len() < 3 || area <= tol * tol {
            return Err(GeometryError::DegeneratePolytope { area });
        }
        let mut normals = Vec::with_capacity(hull.len());
        let mut offsets = Vec::with_capacity(hull.len());
        for (i, &v) in hull.iter().enumerate() {
            let w = hull[(i + 1) % hull.len()];
            let e = w - v;
            let n = Point::new(e.y, -e.x) * (1.0 / e.norm());
            normals.push(n);
            offsets.push(n.dot(v));
        }
        Ok(Polytope {
            id,
            normals,
            offsets,
            vertices: hull,
            repr: Representation::Vertices,
        })
    }

    pub fn id(&self) -> usize {
        self.id
    }

    pub fn with_id(mut self, id: usize) -> Self {
        self.id = id;
        self
    }

    /// Rows of `H`.
    pub fn normals(&self) -> &[Point] {
        &self.normals
    }

    /// The vector `h`.
    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    /// Vertices in counter-clockwise order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn representation(&self) -> Representation {
        self.repr
    }

    /// Closed-set membership: `H p <= h + tol` componentwise.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.normals
            .iter()
            .zip(&self.offsets)
            .all(|(n, &h)| n.dot(p) <= h + tol)
    }

    /// Largest constraint violation `max_r (H p - h)_r`; negative inside.
    pub fn max_violation(&self, p: Point) -> f64 {
        self.normals
            .iter()
            .zip(&self.offsets)
            .map(|(n, &h)| n.dot(p) - h)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Segment::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> f64 {
        polygon_area(&self.vertices)
    }

    /// Vertex centroid; strictly interior for a full-dimensional polytope.
    pub fn centroid(&self) -> Point {
        vertex_centroid(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|e| e.length()).sum()
    }

    /// Whether `p` is on the boundary: inside within `tol` and some row tight.
    pub fn on_boundary(&self, p: Point, tol: f64) -> bool {
        self.contains(p, tol) && self.max_violation(p) >= -tol
    }

    /// Distance from `p` to the polygon (zero inside).
    pub fn distance_to_point(&self, p: Point) -> f64 {
        if self.contains(p, 0.0) {
            return 0.0;
        }
        self.edges()
            .map(|e| e.distance_to(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Minimum Euclidean distance between two convex polygons, zero when they
    /// intersect.
    pub fn distance_to(&self, other: &Polytope) -> f64 {
        if !separated(self, other) {
            return 0.0;
        }
        let a_to_b = self
            .vertices
            .iter()
            .flat_map(|&v| other.edges().map(move |e| e.distance_to(v)));
        let b_to_a = other
            .vertices
            .iter()
            .flat_map(|&v| self.edges().map(move |e| e.distance_to(v)));
        a_to_b.chain(b_to_a).fold(f64::INFINITY, f64::min)
    }

    /// Point at arc length `s` along the boundary, starting at vertex 0 and
    /// walking counter-clockwise. `s` wraps modulo the perimeter.
    pub fn point_at_arc_length(&self, s: f64) -> Point {
        let perimeter = self.perimeter();
        let mut remaining = s.rem_euclid(perimeter);
        for edge in self.edges() {
            let len = edge.length();
            if remaining <= len {
                return edge.start.lerp(edge.end, remaining / len);
            }
            remaining -= len;
        }
        self.vertices[0]
    }

    /// Uniformly scaled copy (about the origin).
    pub fn scaled(&self, factor: f64) -> Polytope {
        Polytope {
            id: self.id,
            normals: self.normals.clone(),
            offsets: self.offsets.iter().map(|h| h * factor).collect(),
            vertices: self.vertices.iter().map(|&v| v * factor).collect(),
            repr: self.repr,
        }
    }
}

/// Separating-axis test over both polygons' edge normals. Touching polygons
/// count as not separated.
fn separated(a: &Polytope, b: &Polytope) -> bool {
    let axes = a.normals.iter().chain(b.normals.iter());
    for &axis in axes {
        let (amin, amax) = project(&a.vertices, axis);
        let (bmin, bmax) = project(&b.vertices, axis);
        if amax < bmin || bmax < amin {
            return true;
        }
    }
    false
}

fn project(points: &[Point], axis: Point) -> (f64, f64) {
    points.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
        let d = p.dot(axis);
        (lo.min(d), hi.max(d))
    })
}

/// Signed shoelace area (positive for counter-clockwise loops).
pub fn polygon_area(points: &[Point]) -> f64 {
    let n = points.len();
    if n < 3 {
        return 0.0;
    }
    let twice: f64 = (0..n).map(|i| points[i].cross(points[(i + 1) % n])).sum();
    0.5 * twice
}

fn vertex_centroid(points: &[Point]) -> Point {
    let sum = points.iter().fold(Point::default(), |acc, &p| acc + p);
    sum * (1.0 / points.len() as f64)
}

/// Andrew's monotone chain; returns the strict hull counter-clockwise,
/// dropping collinear and duplicate points.
pub fn convex_hull(points: &[Point], tol: f64) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup_by(|a, b| a.distance(*b) <= tol);
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: Point, a: Point, b: Point| (a - o).cross(b - o);
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// All vertices of `{x : H x <= h}`, counter-clockwise around their centroid.
///
/// Vertices are the pairwise intersections of constraint lines that satisfy
/// every row within `tol`. Boundedness is checked first: the recession cone
/// `{d : H d <= 0}` of a planar polyhedron is spanned by directions
/// perpendicular to some row, so testing those plus a 16-point compass is
/// exact.
pub fn enumerate_vertices(
    normals: &[Point],
    offsets: &[f64],
    tol: f64,
) -> Result<Vec<Point>, GeometryError> {
    if normals.len() != offsets.len() {
        return Err(GeometryError::ShapeMismatch {
            rows: normals.len(),
            offsets: offsets.len(),
        });
    }
    if normals.len() < 3 {
        return Err(GeometryError::TooFewConstraints(normals.len()));
    }
    if normals.iter().any(|n| !n.is_finite()) || offsets.iter().any(|h| !h.is_finite()) {
        return Err(GeometryError::NonFinite);
    }
    if let Some(d) = recession_direction(normals) {
        return Err(GeometryError::UnboundedPolytope { dx: d.x, dy: d.y });
    }

    let feasible = |p: Point| {
        normals
            .iter()
            .zip(offsets)
            .all(|(n, &h)| n.dot(p) <= h + tol * n.norm().max(1.0))
    };
    let mut found: Vec<Point> = Vec::new();
    for i in 0..normals.len() {
        for j in (i + 1)..normals.len() {
            let det = normals[i].cross(normals[j]);
            let scale = normals[i].norm() * normals[j].norm();
            if det.abs() <= 1e-14 * scale {
                continue;
            }
            let x = (offsets[i] * normals[j].y - offsets[j] * normals[i].y) / det;
            let y = (normals[i].x * offsets[j] - normals[j].x * offsets[i]) / det;
            let p = Point::new(x, y);
            if feasible(p) && !found.iter().any(|q| q.distance(p) <= tol) {
                found.push(p);
            }
        }
    }
    if found.is_empty() {
        return Err(GeometryError::EmptyPolytope);
    }
    // Near-collinear duplicates along an edge are not vertices of the hull.
    let hull = convex_hull(&found, tol);
    let area = polygon_area(&hull);
    if hull.len() < 3 || area <= tol * tol {
        return Err(GeometryError::DegeneratePolytope { area });
    }
    let c = vertex_centroid(&hull);
    let mut hull = hull;
    hull.sort_by(|a, b| {
        let ta = (a.y - c.y).atan2(a.x - c.x);
        let tb = (b.y - c.y).atan2(b.x - c.x);
        ta.total_cmp(&tb)
    });
    Ok(hull)
}

fn recession_direction(normals: &[Point]) -> Option<Point> {
    let compass = (0..16).map(|k| {
        let a = k as f64 * PI / 8.0;
        Point::new(a.cos(), a.sin())
    });
    let perpendiculars = normals.iter().flat_map(|n| {
        let p = n.perp() * (1.0 / n.norm());
        [p, -p]
    });
    compass.chain(perpendiculars).find(|&d| {
        normals
            .iter()
            .all(|n| n.dot(d) <= 1e-12 * n.norm())
    })
}

/// Points where the circle `|p - center| = radius` meets the polygon boundary.
///
/// Each edge is parameterized as `v + s e`, `s in [0, 1]`, and the circle
/// equation solved as a quadratic in `s`. A line whose distance from the
/// center is within `tol` of the radius is a tangency and contributes only the
/// foot of the perpendicular. Points shared by adjacent edges are merged.
pub fn circle_boundary_intersections(
    poly: &Polytope,
    center: Point,
    radius: f64,
    tol: f64,
) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    let push = |p: Point, out: &mut Vec<Point>| {
        if !out.iter().any(|q| q.distance(p) <= tol) {
            out.push(p);
        }
    };
    for edge in poly.edges() {
        let e = edge.end - edge.start;
        let a = e.dot(e);
        if a == 0.0 {
            continue;
        }
        let f = edge.start - center;
        // Foot of the perpendicular from the center onto the edge's line.
        let s_foot = -f.dot(e) / a;
        let foot = edge.start + e * s_foot;
        let dist = foot.distance(center);
        let in_range = |s: f64| (-1e-12..=1.0 + 1e-12).contains(&s);
        if (dist - radius).abs() <= tol {
            if in_range(s_foot) {
                push(foot, &mut out);
            }
            continue;
        }
        if dist > radius {
            continue;
        }
        // Half-chord length along the line, measured in units of `s`.
        let half = ((radius - dist) * (radius + dist)).sqrt() / a.sqrt();
        for s in [s_foot - half, s_foot + half] {
            if in_range(s) {
                push(edge.start + e * s, &mut out);
            }
        }
    }
    out
}

/// Sum of Euclidean segment lengths along the polyline.
pub fn polyline_length(points: &[Point]) -> f64 {
    points.windows(2).map(|w| w[0].distance(w[1])).sum()
}

/// A segment fits the budget when its length is at most `budget`.
pub fn segment_budget_feasible(seg: &Segment, budget: f64) -> bool {
    seg.length() <= budget
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square_h() -> (Vec<Point>, Vec<f64>) {
        (
            vec![
                Point::new(-1.0, 0.0),
                Point::new(0.0, -1.0),
                Point::new(1.0, 0.0),
                Point::new(0.0, 1.0),
            ],
            vec![0.0, 0.0, 1.0, 1.0],
        )
    }

    fn unit_square() -> Polytope {
        let (n, h) = unit_square_h();
        Polytope::from_halfspaces(0, n, h, DEFAULT_TOL).unwrap()
    }

    fn square(x0: f64, y0: f64, x1: f64, y1: f64) -> Polytope {
        Polytope::from_vertices(
            0,
            &[
                Point::new(x0, y0),
                Point::new(x1, y0),
                Point::new(x1, y1),
                Point::new(x0, y1),
            ],
            DEFAULT_TOL,
        )
        .unwrap()
    }

    #[test]
    fn contains_interior_boundary_and_outside() {
        let sq = unit_square();
        assert!(sq.contains(Point::new(0.5, 0.5), 0.0));
        assert!(sq.contains(Point::new(1.0, 1.0), 0.0));
        assert!(!sq.contains(Point::new(1.001, 0.5), 1e-9));
    }

    #[test]
    fn enumerates_unit_square_ccw() {
        let (n, h) = unit_square_h();
        let v = enumerate_vertices(&n, &h, DEFAULT_TOL).unwrap();
        assert_eq!(
            v,
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(0.0, 1.0)
            ]
        );
        assert!(polygon_area(&v) > 0.0);
    }

    #[test]
    fn enumerates_triangle() {
        let n = vec![Point::new(-1.0, 0.0), Point::new(0.0, -1.0), Point::new(1.0, 1.0)];
        let h = vec![0.0, 0.0, 1.0];
        let v = enumerate_vertices(&n, &h, DEFAULT_TOL).unwrap();
        assert_eq!(v.len(), 3);
        for expected in [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)] {
            assert!(v.iter().any(|p| p.distance(expected) < 1e-12));
        }
    }

    #[test]
    fn redundant_row_is_ignored() {
        let (mut n, mut h) = unit_square_h();
        n.push(Point::new(1.0, 0.0));
        h.push(2.0);
        let v = enumerate_vertices(&n, &h, DEFAULT_TOL).unwrap();
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn vertex_enumeration_errors() {
        // Half-strip x in [0, 1], y >= 0 is unbounded upward.
        let n = vec![Point::new(-1.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, -1.0)];
        let h = vec![0.0, 1.0, 0.0];
        assert!(matches!(
            enumerate_vertices(&n, &h, DEFAULT_TOL),
            Err(GeometryError::UnboundedPolytope { .. })
        ));

        let (n, mut h) = unit_square_h();
        h[2] = -1.0; // x <= -1 and x >= 0
        assert_eq!(enumerate_vertices(&n, &h, DEFAULT_TOL), Err(GeometryError::EmptyPolytope));

        let (n, mut h) = unit_square_h();
        h[2] = 0.0; // x in [0, 0]
        assert!(matches!(
            enumerate_vertices(&n, &h, DEFAULT_TOL),
            Err(GeometryError::DegeneratePolytope { .. })
        ));

        assert_eq!(
            enumerate_vertices(&n[..2], &h[..2], DEFAULT_TOL),
            Err(GeometryError::TooFewConstraints(2))
        );
    }

    #[test]
    fn circle_meets_edge_at_expected_height() {
        let sq = square(2.0, 0.0, 3.0, 1.0);
        let pts = circle_boundary_intersections(&sq, Point::new(0.0, 0.0), 2.2, DEFAULT_TOL);
        let expected = Point::new(2.0, 0.84f64.sqrt());
        assert!(pts.iter().any(|p| p.distance(expected) < 1e-12), "{pts:?}");
    }

    #[test]
    fn enclosing_circle_misses_boundary() {
        let pts = circle_boundary_intersections(&unit_square(), Point::new(0.5, 0.5), 10.0, DEFAULT_TOL);
        assert!(pts.is_empty());
    }

    #[test]
    fn tangent_circle_gives_single_point() {
        let pts = circle_boundary_intersections(&unit_square(), Point::new(2.0, 0.5), 1.0, DEFAULT_TOL);
        assert_eq!(pts, vec![Point::new(1.0, 0.5)]);
    }

    #[test]
    fn circle_through_vertex_is_reported_once() {
        let pts = circle_boundary_intersections(&unit_square(), Point::new(2.0, 0.0), 1.0, DEFAULT_TOL);
        assert_eq!(pts.len(), 1);
        assert!(pts[0].distance(Point::new(1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn polyline_lengths() {
        assert_eq!(polyline_length(&[Point::new(0.0, 0.0)]), 0.0);
        assert_eq!(polyline_length(&[Point::new(0.0, 0.0), Point::new(3.0, 4.0)]), 5.0);
        let l = polyline_length(&[Point::new(0.0, 0.0), Point::new(18.0, 14.0)]);
        assert!((l - 22.8035).abs() < 1e-4);
    }

    #[test]
    fn budget_feasibility_of_segments() {
        let o = Point::new(0.0, 0.0);
        assert!(segment_budget_feasible(&Segment::new(o, Point::new(0.0, 3.0)), 3.0));
        assert!(!segment_budget_feasible(&Segment::new(o, Point::new(0.0, 3.0001)), 3.0));
        assert!(segment_budget_feasible(&Segment::new(o, Point::new(2.0, 2.0)), 3.0));
    }

    #[test]
    fn from_vertices_builds_unit_normals() {
        let sq = square(1.5, -0.5, 2.5, 0.5);
        assert_eq!(sq.normals().len(), 4);
        for n in sq.normals() {
            assert!((n.norm() - 1.0).abs() < 1e-15);
        }
        assert!(sq.contains(Point::new(2.0, 0.0), 0.0));
        assert!(!sq.contains(Point::new(2.6, 0.0), 1e-9));
        // Interior collinear and duplicate points are dropped.
        let p = Polytope::from_vertices(
            0,
            &[
                Point::new(0.0, 0.0),
                Point::new(0.5, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(1.0, 1.0),
                Point::new(0.2, 0.2),
            ],
            DEFAULT_TOL,
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn polygon_distances() {
        let a = square(0.0, 0.0, 1.0, 1.0);
        let b = square(3.0, 0.0, 4.0, 1.0);
        assert!((a.distance_to(&b) - 2.0).abs() < 1e-12);
        let c = square(0.5, 0.5, 2.0, 2.0);
        assert_eq!(a.distance_to(&c), 0.0);
        let d = square(1.0, 1.0, 2.0, 2.0);
        assert_eq!(a.distance_to(&d), 0.0);
        assert!((a.distance_to_point(Point::new(2.0, 2.0)) - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn arc_length_walks_ccw_from_vertex_zero() {
        let sq = unit_square();
        assert_eq!(sq.point_at_arc_length(0.0), Point::new(0.0, 0.0));
        assert!(sq.point_at_arc_length(1.5).distance(Point::new(1.0, 0.5)) < 1e-15);
        assert!(sq.point_at_arc_length(3.25).distance(Point::new(0.0, 0.75)) < 1e-15);
    }
}
