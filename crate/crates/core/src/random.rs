//! Random convex bodies and interior points for property tests and
//! randomized acceptance suites.

use std::f64::consts::PI;

use rand::Rng;

use crate::error::Result;
use crate::geom2d::{convex_hull2, ConvexPolygon2, Point2};
use crate::geom3d::{hull3, ConvexPolyhedron3, Point3};

/// Random convex polygon with between `min_vertices` and `max_vertices`
/// vertices: perturbed points on a circle, hulled, then stretched and
/// rotated.
pub fn random_convex_polygon<R: Rng>(
    rng: &mut R,
    min_vertices: usize,
    max_vertices: usize,
) -> ConvexPolygon2 {
    assert!(3 <= min_vertices && min_vertices <= max_vertices);
    loop {
        let n = rng.gen_range(min_vertices..=max_vertices);
        let pts: Vec<Point2> = (0..n)
            .map(|_| {
                let t = rng.gen_range(0.0..2.0 * PI);
                let r = rng.gen_range(0.7..1.0);
                Point2::new(r * t.cos(), r * t.sin())
            })
            .collect();
        let Ok(hull) = convex_hull2(&pts) else {
            continue;
        };
        if hull.len() < min_vertices {
            continue;
        }
        let sx = rng.gen_range(0.5..1.5);
        let angle = rng.gen_range(0.0..PI);
        let shift = Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let mapped: Vec<Point2> = hull
            .vertices()
            .iter()
            .map(|v| Point2::new(v.x * sx, v.y).rotated(angle) + shift)
            .collect();
        if let Ok(p) = convex_hull2(&mapped) {
            if p.len() >= min_vertices {
                return p;
            }
        }
    }
}

/// Random point strictly inside a polygon (random convex combination of
/// the vertices).
pub fn random_interior_point2<R: Rng>(rng: &mut R, poly: &ConvexPolygon2) -> Point2 {
    let w: Vec<f64> = (0..poly.len())
        .map(|_| -rng.gen_range(1e-3f64..1.0).ln())
        .collect();
    let total: f64 = w.iter().sum();
    poly.vertices()
        .iter()
        .zip(&w)
        .fold(Point2::new(0.0, 0.0), |acc, (v, wi)| {
            acc + *v * (wi / total)
        })
}

/// Hull of `n` uniform points on the sphere, stretched by `axes`.
pub fn random_sphere_hull<R: Rng>(
    rng: &mut R,
    n: usize,
    axes: [f64; 3],
) -> Result<ConvexPolyhedron3> {
    let pts: Vec<Point3> = (0..n)
        .map(|_| {
            let z: f64 = rng.gen_range(-1.0..1.0);
            let t = rng.gen_range(0.0..2.0 * PI);
            let r = (1.0 - z * z).sqrt();
            Point3::new(axes[0] * r * t.cos(), axes[1] * r * t.sin(), axes[2] * z)
        })
        .collect();
    hull3(&pts)
}

/// Hull of `n` uniform points in the box `[0, a] × [0, b] × [0, c]`.
pub fn random_box_hull<R: Rng>(rng: &mut R, n: usize, dims: [f64; 3]) -> Result<ConvexPolyhedron3> {
    let pts: Vec<Point3> = (0..n)
        .map(|_| {
            Point3::new(
                rng.gen_range(0.0..dims[0]),
                rng.gen_range(0.0..dims[1]),
                rng.gen_range(0.0..dims[2]),
            )
        })
        .collect();
    hull3(&pts)
}

/// Random point strictly inside a polyhedron.
pub fn random_interior_point3<R: Rng>(rng: &mut R, poly: &ConvexPolyhedron3) -> Point3 {
    let w: Vec<f64> = (0..poly.vertex_count())
        .map(|_| -rng.gen_range(1e-3f64..1.0).ln())
        .collect();
    let total: f64 = w.iter().sum();
    poly.vertices()
        .iter()
        .zip(&w)
        .fold(Point3::ORIGIN, |acc, (v, wi)| acc + *v * (wi / total))
}
