use serde::{Deserialize, Serialize};

use super::point::{Mat3, Point3};
use super::polyhedron::ConvexPolyhedron3;

/// Circumscribed brick with axes sorted by increasing extent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    /// Unit axes; `axes[i]` carries `half_extents[i]`.
    pub axes: [Point3; 3],
    pub center: Point3,
    pub half_extents: [f64; 3],
}

impl BoundingBox {
    /// Full edge lengths `(a, b, c)` with `a <= b <= c`.
    pub fn extents(&self) -> [f64; 3] {
        self.half_extents.map(|h| 2.0 * h)
    }

    pub fn contains(&self, p: Point3, tol: f64) -> bool {
        (0..3).all(|i| (self.axes[i].dot(p - self.center)).abs() <= self.half_extents[i] + tol)
    }
}

/// Tight brick along the rows of `frame`, which must be orthonormal.
pub fn bounding_box(poly: &ConvexPolyhedron3, frame: &Mat3) -> BoundingBox {
    let mut slabs: Vec<(Point3, f64, f64)> = (0..3)
        .map(|i| {
            let axis = frame.row(i);
            let (lo, hi) = poly.support(axis);
            (axis, lo, hi)
        })
        .collect();
    slabs.sort_by(|a, b| (a.2 - a.1).total_cmp(&(b.2 - b.1)));
    let center = slabs.iter().fold(Point3::ORIGIN, |acc, &(axis, lo, hi)| {
        acc + axis * (0.5 * (lo + hi))
    });
    BoundingBox {
        axes: [slabs[0].0, slabs[1].0, slabs[2].0],
        center,
        half_extents: [
            0.5 * (slabs[0].2 - slabs[0].1),
            0.5 * (slabs[1].2 - slabs[1].1),
            0.5 * (slabs[2].2 - slabs[2].1),
        ],
    }
}

pub fn aabb(poly: &ConvexPolyhedron3) -> BoundingBox {
    bounding_box(poly, &Mat3::IDENTITY)
}
