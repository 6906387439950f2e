use super::point::Point2;
use super::polygon::ConvexPolygon2;

/// Tolerance of the closed strip-cover inequalities.
pub const STRIP_COVER_TOL: f64 = 1e-12;

/// Largest radius `rho` for which `q + rho·B` fits between two parallel lines
/// through `a` and `b` respectively.
///
/// With `u` the unit normal of the strip, the disk fits iff
/// `min(u·(q-a), u·(b-q)) >= rho`. The maximum of the minimum of two
/// sinusoids over the circle is attained either where one of them peaks or
/// where they are equal, so four candidates suffice.
fn side_slack(a: Point2, b: Point2, q: Point2) -> f64 {
    let v1 = q - a;
    let v2 = b - q;
    let mut candidates = Vec::with_capacity(4);
    for v in [v1, v2] {
        if v.norm() > 0.0 {
            candidates.push(v.normalized());
        }
    }
    let diff = v1 - v2;
    if diff.norm() > 0.0 {
        let u = diff.perp().normalized();
        candidates.push(u);
        candidates.push(-u);
    }
    candidates
        .into_iter()
        .map(|u| u.dot(v1).min(u.dot(v2)))
        .fold(0.0, f64::max)
}

/// Largest disk radius about `q` admitting a strip cover by the sides of
/// `poly`.
pub fn strip_cover_slack(poly: &ConvexPolygon2, q: Point2) -> f64 {
    (0..poly.len())
        .map(|i| {
            let (a, b) = poly.edge(i);
            side_slack(a, b, q)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Whether the closed disk `q + rho·B` admits a strip cover by the sides of
/// `poly`: for every side `[a, b]` some strip bounded by parallel lines through
/// `a` and `b` contains the disk.
pub fn strip_cover_admits(poly: &ConvexPolygon2, q: Point2, rho: f64) -> bool {
    rho <= strip_cover_slack(poly, q) + STRIP_COVER_TOL
}
