use serde::{Deserialize, Serialize};

use super::point::Line2;
use super::polygon::ConvexPolygon2;

/// Which closed half-plane of an oriented line to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `signed_distance >= 0` (left of the line direction).
    Positive,
    Negative,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Positive => 1.0,
            Side::Negative => -1.0,
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Positive => Side::Negative,
            Side::Negative => Side::Positive,
        }
    }
}

/// Intersection of `poly` with a closed half-plane of `line`.
///
/// Vertices within tolerance of the line are snapped onto it. Returns `None`
/// when the intersection has zero area.
pub fn clip_halfplane(poly: &ConvexPolygon2, line: &Line2, keep: Side) -> Option<ConvexPolygon2> {
    let eps = poly.eps();
    let sign = keep.sign();
    let dist: Vec<f64> = poly
        .vertices()
        .iter()
        .map(|v| {
            let d = sign * line.signed_distance(*v);
            if d.abs() <= eps {
                0.0
            } else {
                d
            }
        })
        .collect();
    if dist.iter().all(|&d| d >= 0.0) {
        return Some(poly.clone());
    }
    if dist.iter().all(|&d| d <= 0.0) {
        return None;
    }
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let j = (i + 1) % n;
        let (a, b) = poly.edge(i);
        let (da, db) = (dist[i], dist[j]);
        if da >= 0.0 {
            out.push(if da == 0.0 { line.project(a) } else { a });
        }
        if (da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0) {
            let t = da / (da - db);
            out.push(a + (b - a) * t);
        }
    }
    ConvexPolygon2::from_ccw_cleaned(out, poly.diameter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom2d::{polygon_new, Point2};

    fn unit_square() -> ConvexPolygon2 {
        polygon_new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn half_square() {
        // x = 0.5 with positive side x > 0.5
        let line = Line2::from_normal_offset(0.0, 0.5);
        let left = clip_halfplane(&unit_square(), &line, Side::Negative).unwrap();
        assert!((left.area() - 0.5).abs() < 1e-15);
        assert_eq!(left.len(), 4);
    }

    #[test]
    fn miss_is_identity() {
        let sq = unit_square();
        let line = Line2::from_normal_offset(0.0, 3.0);
        assert_eq!(clip_halfplane(&sq, &line, Side::Negative).unwrap(), sq);
        assert!(clip_halfplane(&sq, &line, Side::Positive).is_none());
    }

    #[test]
    fn diagonal_corner() {
        let line = Line2::from_normal_offset(std::f64::consts::FRAC_PI_4, 0.5 / 2f64.sqrt());
        let tri = clip_halfplane(&unit_square(), &line, Side::Negative).unwrap();
        assert_eq!(tri.len(), 3);
        assert!((tri.area() - 0.125).abs() < 1e-15);
        let expect = [
            Point2::new(0.0, 0.0),
            Point2::new(0.5, 0.0),
            Point2::new(0.0, 0.5),
        ];
        for e in expect {
            assert!(tri.vertices().iter().any(|v| v.dist(e) < 1e-15));
        }
    }

    #[test]
    fn cut_through_vertices() {
        // diagonal through (0,0) and (1,1)
        let line = Line2::through(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0));
        let upper = clip_halfplane(&unit_square(), &line, Side::Positive).unwrap();
        assert_eq!(upper.len(), 3);
        assert!((upper.area() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn supporting_line_through_edge() {
        let line = Line2::from_normal_offset(0.0, 1.0);
        let sq = unit_square();
        assert_eq!(clip_halfplane(&sq, &line, Side::Negative).unwrap(), sq);
        assert!(clip_halfplane(&sq, &line, Side::Positive).is_none());
    }
}
