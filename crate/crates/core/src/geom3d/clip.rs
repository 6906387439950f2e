use super::hull::hull3;
use super::point::{Plane, Point3};
use super::polyhedron::ConvexPolyhedron3;
use crate::tolerance::DEGENERATE_AREA_REL;

/// Intersection with the closed half-space `normal·x <= offset`.
///
/// Returns `None` when nothing (or only a sliver) remains.
pub fn clip_halfspace3(poly: &ConvexPolyhedron3, plane: &Plane) -> Option<ConvexPolyhedron3> {
    let tol = poly.eps();
    let sd: Vec<f64> = poly
        .vertices()
        .iter()
        .map(|v| plane.signed_distance(*v))
        .collect();
    if sd.iter().all(|&d| d <= tol) {
        return Some(poly.clone());
    }
    if sd.iter().all(|&d| d >= -tol) {
        return None;
    }
    let mut pts: Vec<Point3> = poly
        .vertices()
        .iter()
        .zip(&sd)
        .filter(|(_, &d)| d <= tol)
        .map(|(v, _)| *v)
        .collect();
    for e in poly.edges() {
        let (da, db) = (sd[e.a], sd[e.b]);
        if (da < -tol && db > tol) || (da > tol && db < -tol) {
            let (a, b) = (poly.vertices()[e.a], poly.vertices()[e.b]);
            let t = da / (da - db);
            pts.push(a + (b - a) * t);
        }
    }
    let piece = hull3(&pts).ok()?;
    if piece.volume() <= DEGENERATE_AREA_REL * poly.diameter().powi(3) {
        return None;
    }
    Some(piece)
}
