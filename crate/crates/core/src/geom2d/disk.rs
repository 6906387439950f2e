use super::point::Point2;
use super::polygon::ConvexPolygon2;

/// Signed area of `disk(0, r) ∩ triangle(0, a, b)`.
fn disk_triangle_area(a: Point2, b: Point2, r: f64) -> f64 {
    let d = b - a;
    let qa = d.norm_sq();
    if qa == 0.0 {
        return 0.0;
    }
    // |a + t d|^2 = r^2
    let qb = a.dot(d);
    let qc = a.norm_sq() - r * r;
    let disc = qb * qb - qa * qc;
    if disc <= 0.0 {
        // the line misses or touches the circle
        return 0.5 * r * r * a.cross(b).atan2(a.dot(b));
    }
    let mut cuts = [0.0, 1.0, 1.0, 1.0];
    let mut m = 1;
    let s = disc.sqrt();
    for t in [(-qb - s) / qa, (-qb + s) / qa] {
        if t > 0.0 && t < 1.0 {
            cuts[m] = t;
            m += 1;
        }
    }
    cuts[m] = 1.0;
    let mut total = 0.0;
    for k in 0..m {
        let p = a + d * cuts[k];
        let q = a + d * cuts[k + 1];
        let mid = a + d * (0.5 * (cuts[k] + cuts[k + 1]));
        if mid.norm_sq() <= r * r {
            total += 0.5 * p.cross(q);
        } else {
            total += 0.5 * r * r * p.cross(q).atan2(p.dot(q));
        }
    }
    total
}

/// Exact area of `poly ∩ disk(center, r)`.
pub fn area_inside_disk(poly: &ConvexPolygon2, center: Point2, r: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    let total: f64 = (0..poly.len())
        .map(|i| {
            let (a, b) = poly.edge(i);
            disk_triangle_area(a - center, b - center, r)
        })
        .sum();
    total.clamp(0.0, poly.area())
}

/// Exact area of `{z ∈ poly : |z - center| > r}`.
pub fn area_outside_disk(poly: &ConvexPolygon2, center: Point2, r: f64) -> f64 {
    (poly.area() - area_inside_disk(poly, center, r)).max(0.0)
}
