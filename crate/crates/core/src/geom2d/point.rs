use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point2 { x: c, y: s }
    }

    #[inline]
    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn normalized(self) -> Point2 {
        self / self.norm()
    }

    /// Counterclockwise rotation by 90 degrees.
    #[inline]
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn rotated(self, theta: f64) -> Point2 {
        let (s, c) = theta.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Point2 {
    fn add_assign(&mut self, o: Point2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Point2 {
    type Output = Point2;
    fn div(self, s: f64) -> Point2 {
        Point2::new(self.x / s, self.y / s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// Oriented line through `origin` along the unit vector `direction`.
///
/// The positive side is to the left of `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line2 {
    pub origin: Point2,
    pub direction: Point2,
}

impl Line2 {
    /// Panics if `direction` is zero or not finite.
    pub fn new(origin: Point2, direction: Point2) -> Self {
        let len = direction.norm();
        assert!(
            len > 0.0 && len.is_finite(),
            "line direction must be nonzero"
        );
        Line2 {
            origin,
            direction: direction / len,
        }
    }

    pub fn through(a: Point2, b: Point2) -> Self {
        Line2::new(a, b - a)
    }

    /// The line `{z : n·z = offset}` with `n = (cos theta, sin theta)`.
    /// Points with `n·z > offset` are on the positive side.
    pub fn from_normal_offset(theta: f64, offset: f64) -> Self {
        let n = Point2::from_angle(theta);
        Line2 {
            origin: n * offset,
            direction: Point2::new(n.y, -n.x),
        }
    }

    /// Unit normal pointing to the positive side.
    pub fn normal(&self) -> Point2 {
        self.direction.perp()
    }

    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.direction.cross(p - self.origin)
    }

    pub fn project(&self, p: Point2) -> Point2 {
        self.origin + self.direction * (p - self.origin).dot(self.direction)
    }
}

/// Half line starting at `origin` along the unit vector `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ray2 {
    pub origin: Point2,
    pub direction: Point2,
}

impl Ray2 {
    pub fn new(origin: Point2, direction: Point2) -> Self {
        let len = direction.norm();
        assert!(
            len > 0.0 && len.is_finite(),
            "ray direction must be nonzero"
        );
        Ray2 {
            origin,
            direction: direction / len,
        }
    }
}

pub fn dist_point_to_line(p: Point2, line: &Line2) -> f64 {
    line.signed_distance(p).abs()
}

pub fn dist_point_to_ray(p: Point2, ray: &Ray2) -> f64 {
    let t = (p - ray.origin).dot(ray.direction).max(0.0);
    p.dist(ray.origin + ray.direction * t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances() {
        let line = Line2::new(Point2::ORIGIN, Point2::new(1.0, 0.0));
        assert_eq!(dist_point_to_line(Point2::new(1.0, 1.0), &line), 1.0);
        let ray = Ray2::new(Point2::ORIGIN, Point2::new(1.0, 0.0));
        assert!((dist_point_to_ray(Point2::new(-1.0, 1.0), &ray) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(dist_point_to_ray(Point2::new(2.0, 1.0), &ray), 1.0);
    }

    #[test]
    fn normal_offset_sign() {
        let line = Line2::from_normal_offset(0.3, 0.2);
        let n = Point2::from_angle(0.3);
        let p = Point2::new(0.7, -0.4);
        assert!((line.signed_distance(p) - (n.dot(p) - 0.2)).abs() < 1e-14);
        assert!((line.normal() - n).norm() < 1e-15);
    }
}
