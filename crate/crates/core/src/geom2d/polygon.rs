use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::point::Point2;
use crate::error::{Error, Result};
use crate::tolerance::{eps_geom, DEGENERATE_AREA_REL};

/// A strictly convex polygon with counterclockwise vertex order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolygonFile", into = "PolygonFile")]
pub struct ConvexPolygon2 {
    vertices: Vec<Point2>,
    diameter: f64,
}

/// On-disk representation: `{"vertices": [[x, y], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<[f64; 2]>,
}

impl TryFrom<PolygonFile> for ConvexPolygon2 {
    type Error = Error;
    fn try_from(f: PolygonFile) -> Result<Self> {
        polygon_new(f.vertices.iter().map(|v| Point2::new(v[0], v[1])).collect())
    }
}

/// Parses `{"vertices": [[x, y], ...]}` and validates the polygon.
pub fn polygon_from_json(text: &str) -> Result<ConvexPolygon2> {
    let file: PolygonFile = serde_json::from_str(text)?;
    ConvexPolygon2::try_from(file)
}

impl From<ConvexPolygon2> for PolygonFile {
    fn from(p: ConvexPolygon2) -> Self {
        PolygonFile {
            vertices: p.vertices.iter().map(|v| [v.x, v.y]).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NgonScale {
    /// Each side has length `1/S`.
    UnitPerimeter,
    Circumradius(f64),
}

fn diameter_of(points: &[Point2]) -> f64 {
    let mut d2: f64 = 0.0;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            d2 = d2.max((*a - *b).norm_sq());
        }
    }
    d2.sqrt()
}

fn signed_area(points: &[Point2]) -> f64 {
    let o = points[0];
    let mut twice = 0.0;
    for i in 1..points.len() - 1 {
        twice += (points[i] - o).cross(points[i + 1] - o);
    }
    0.5 * twice
}

/// Validates and canonicalizes a convex vertex cycle.
///
/// Clockwise input is reversed. The result starts at the lowest, then
/// leftmost, vertex.
pub fn polygon_new(mut points: Vec<Point2>) -> Result<ConvexPolygon2> {
    if points.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "{} points, need at least 3",
            points.len()
        )));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::DegenerateInput("non-finite coordinate".into()));
    }
    let diameter = diameter_of(&points);
    let area = signed_area(&points);
    if diameter == 0.0 || area.abs() < DEGENERATE_AREA_REL * diameter * diameter {
        // a flat point set is degenerate; a self-cancelling cycle is not convex
        let far = points
            .iter()
            .max_by(|a, b| a.dist(points[0]).total_cmp(&b.dist(points[0])))
            .unwrap();
        let axis = *far - points[0];
        let spread = points
            .iter()
            .map(|q| axis.cross(*q - points[0]).abs())
            .fold(0.0, f64::max);
        if diameter > 0.0 && spread > eps_geom() * diameter * diameter {
            return Err(Error::NonConvexInput(
                "vertex cycle is self-intersecting".into(),
            ));
        }
        return Err(Error::DegenerateInput(
            "area is zero relative to the diameter".into(),
        ));
    }
    if area < 0.0 {
        points.reverse();
    }
    let n = points.len();
    let eps = eps_geom();
    let mut turning = 0.0;
    for i in 0..n {
        let a = points[i];
        let b = points[(i + 1) % n];
        let c = points[(i + 2) % n];
        let e1 = b - a;
        let e2 = c - b;
        let (l1, l2) = (e1.norm(), e2.norm());
        if l1 <= eps * diameter || l2 <= eps * diameter {
            return Err(Error::DegenerateInput(format!(
                "repeated vertex near index {}",
                (i + 1) % n
            )));
        }
        let sin = e1.cross(e2) / (l1 * l2);
        if sin <= eps {
            return Err(Error::NonConvexInput(format!(
                "turn at vertex {} is not strictly left (sin = {sin:.3e})",
                (i + 1) % n
            )));
        }
        turning += e1.cross(e2).atan2(e1.dot(e2));
    }
    if (turning - 2.0 * PI).abs() > 1e-6 {
        return Err(Error::NonConvexInput(
            "vertex cycle winds more than once".into(),
        ));
    }
    let start = (0..n)
        .min_by(|&i, &j| {
            let (p, q) = (points[i], points[j]);
            p.y.total_cmp(&q.y).then(p.x.total_cmp(&q.x))
        })
        .unwrap();
    points.rotate_left(start);
    Ok(ConvexPolygon2 {
        vertices: points,
        diameter,
    })
}

/// Convex hull of a point set (Andrew's monotone chain), collinear points
/// dropped.
pub fn convex_hull2(points: &[Point2]) -> Result<ConvexPolygon2> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(
            "fewer than 3 distinct points".into(),
        ));
    }
    let scale = diameter_of(&pts);
    let tol = eps_geom() * scale * scale;
    let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point2>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if (b - a).cross(p - a) <= tol {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        hull.pop();
    }
    polygon_new(hull)
}

/// Regular polygon with vertices at angles `2πk/S` around `center`.
pub fn regular_ngon(sides: usize, scale: NgonScale, center: Point2) -> Result<ConvexPolygon2> {
    if sides < 3 {
        return Err(Error::InvalidParameter(format!(
            "regular polygon needs S >= 3, got {sides}"
        )));
    }
    let s = sides as f64;
    let radius = match scale {
        NgonScale::UnitPerimeter => 1.0 / (2.0 * s * (PI / s).sin()),
        NgonScale::Circumradius(r) if r > 0.0 && r.is_finite() => r,
        NgonScale::Circumradius(r) => {
            return Err(Error::InvalidParameter(format!(
                "circumradius must be positive, got {r}"
            )))
        }
    };
    let pts = (0..sides)
        .map(|k| center + Point2::from_angle(2.0 * PI * k as f64 / s) * radius)
        .collect();
    polygon_new(pts)
}

impl ConvexPolygon2 {
    /// Builds from a counterclockwise cycle that may contain near-duplicate or
    /// near-collinear vertices (e.g. clipping output). Returns `None` when the
    /// cleaned cycle has zero area relative to `ref_diameter`.
    pub(crate) fn from_ccw_cleaned(
        points: Vec<Point2>,
        ref_diameter: f64,
    ) -> Option<ConvexPolygon2> {
        let eps = eps_geom();
        let tol = eps * ref_diameter;
        let mut pts = points;
        loop {
            let n = pts.len();
            if n < 3 {
                return None;
            }
            let mut removed = false;
            let mut out: Vec<Point2> = Vec::with_capacity(n);
            for i in 0..n {
                let prev = if let Some(&last) = out.last() {
                    last
                } else {
                    pts[(i + n - 1) % n]
                };
                let cur = pts[i];
                let next = pts[(i + 1) % n];
                if cur.dist(prev) <= tol {
                    removed = true;
                    continue;
                }
                let chord = next - prev;
                let len = chord.norm();
                if len > tol && chord.cross(cur - prev).abs() / len <= tol {
                    removed = true;
                    continue;
                }
                out.push(cur);
            }
            pts = out;
            if !removed {
                break;
            }
        }
        if pts.len() < 3 || signed_area(&pts) <= DEGENERATE_AREA_REL * ref_diameter * ref_diameter {
            return None;
        }
        polygon_new(pts).ok()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (Point2, Point2) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Absolute tolerance for on-boundary decisions.
    pub fn eps(&self) -> f64 {
        eps_geom() * self.diameter
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                a.dist(b)
            })
            .sum()
    }

    /// Centroid of the uniform lamina.
    pub fn centroid(&self) -> Point2 {
        let o = self.vertices[0];
        let mut acc = Point2::ORIGIN;
        let mut twice_area = 0.0;
        for i in 1..self.len() - 1 {
            let a = self.vertices[i] - o;
            let b = self.vertices[i + 1] - o;
            let w = a.cross(b);
            twice_area += w;
            acc += (a + b) * w;
        }
        o + acc / (3.0 * twice_area)
    }

    /// `(min, max)` of `n·v` over the vertices.
    pub fn support(&self, n: Point2) -> (f64, f64) {
        self.vertices
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                let h = n.dot(*v);
                (lo.min(h), hi.max(h))
            })
    }

    /// Minimum signed distance from `p` to the edge lines, positive inside.
    pub fn inset_distance(&self, p: Point2) -> f64 {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                (b - a).cross(p - a) / a.dist(b)
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains_strictly(&self, p: Point2) -> bool {
        self.inset_distance(p) > self.eps()
    }

    /// Euclidean distance from `p` to the polygon (zero inside).
    pub fn distance_to(&self, p: Point2) -> f64 {
        if self.inset_distance(p) >= 0.0 {
            return 0.0;
        }
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                let e = b - a;
                let t = ((p - a).dot(e) / e.norm_sq()).clamp(0.0, 1.0);
                p.dist(a + e * t)
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Hausdorff distance between two convex polygons (attained at vertices).
    pub fn hausdorff(&self, other: &ConvexPolygon2) -> f64 {
        let one = self
            .vertices
            .iter()
            .map(|v| other.distance_to(*v))
            .fold(0.0, f64::max);
        let two = other
            .vertices
            .iter()
            .map(|v| self.distance_to(*v))
            .fold(0.0, f64::max);
        one.max(two)
    }

    pub fn transformed(&self, f: impl Fn(Point2) -> Point2) -> Result<ConvexPolygon2> {
        polygon_new(self.vertices.iter().map(|v| f(*v)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point2> {
        v.iter().map(|&(x, y)| Point2::new(x, y)).collect()
    }

    #[test]
    fn unit_square_canonical() {
        let p = polygon_new(pts(&[(1.0, 1.0), (0.0, 1.0), (0.0, 0.0), (1.0, 0.0)])).unwrap();
        assert_eq!(p.vertex(0), Point2::new(0.0, 0.0));
        assert_eq!(p.vertex(1), Point2::new(1.0, 0.0));
    }

    #[test]
    fn clockwise_is_reversed() {
        let p = polygon_new(pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)])).unwrap();
        assert!(p.area() > 0.0);
        assert_eq!(p.vertex(1), Point2::new(1.0, 0.0));
    }

    #[test]
    fn crossing_cycle_rejected() {
        let e = polygon_new(pts(&[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)])).unwrap_err();
        assert!(matches!(e, Error::NonConvexInput(_)), "{e:?}");
    }

    #[test]
    fn collinear_triple_degenerate() {
        let e = polygon_new(pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])).unwrap_err();
        assert!(matches!(e, Error::DegenerateInput(_)));
    }

    #[test]
    fn pentagram_rejected() {
        let star: Vec<Point2> = (0..5)
            .map(|k| Point2::from_angle(4.0 * PI * k as f64 / 5.0))
            .collect();
        assert!(matches!(polygon_new(star), Err(Error::NonConvexInput(_))));
    }

    #[test]
    fn mass_properties() {
        let sq = polygon_new(pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).unwrap();
        assert!((sq.area() - 1.0).abs() < 1e-15);
        assert!((sq.perimeter() - 4.0).abs() < 1e-15);
        assert!(sq.centroid().dist(Point2::new(0.5, 0.5)) < 1e-15);
        let tri = polygon_new(pts(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)])).unwrap();
        assert!((tri.area() - 6.0).abs() < 1e-14);
        assert!(tri.centroid().dist(Point2::new(4.0 / 3.0, 1.0)) < 1e-14);
        let hex = regular_ngon(6, NgonScale::Circumradius(1.0), Point2::ORIGIN).unwrap();
        assert!((hex.area() - 2.598076211353316).abs() < 1e-12);
    }

    #[test]
    fn regular_sizes() {
        let sq = regular_ngon(4, NgonScale::UnitPerimeter, Point2::ORIGIN).unwrap();
        let (a, b) = sq.edge(0);
        assert!((a.dist(b) - 0.25).abs() < 1e-15);
        assert!((sq.inset_distance(Point2::ORIGIN) - 0.125).abs() < 1e-15);
        let tri = regular_ngon(3, NgonScale::Circumradius(1.0), Point2::ORIGIN).unwrap();
        let (a, b) = tri.edge(0);
        assert!((a.dist(b) - 3f64.sqrt()).abs() < 1e-14);
        let hex = regular_ngon(6, NgonScale::UnitPerimeter, Point2::ORIGIN).unwrap();
        assert!((hex.inset_distance(Point2::ORIGIN) - 0.14433756729740643).abs() < 1e-12);
        assert!(regular_ngon(2, NgonScale::UnitPerimeter, Point2::ORIGIN).is_err());
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let h = convex_hull2(&pts(&[
            (0.0, 0.0),
            (0.5, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
            (0.3, 0.4),
        ]))
        .unwrap();
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn json_round_trip() {
        let sq = polygon_new(pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).unwrap();
        let s = serde_json::to_string(&sq).unwrap();
        assert_eq!(
            s,
            r#"{"vertices":[[0.0,0.0],[1.0,0.0],[1.0,1.0],[0.0,1.0]]}"#
        );
        let back: ConvexPolygon2 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, sq);
        assert!(serde_json::from_str::<ConvexPolygon2>(
            r#"{"vertices":[[0,0],[1,1],[1,0],[0,1]]}"#
        )
        .is_err());
    }
}
