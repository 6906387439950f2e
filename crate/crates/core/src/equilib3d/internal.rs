use std::collections::HashMap;

use rayon::prelude::*;

use super::{classify3, face_margin, RobustnessKind3, RobustnessReport3, Witness3};
use crate::error::{Error, Result};
use crate::geom3d::{ConvexPolyhedron3, Point3};
use crate::robust2d::Method;
use crate::sampling::fibonacci_sphere;

/// Extent of the walls along the face normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WallMode {
    /// Full strips, unbounded on both sides of the face.
    #[default]
    Strips,
    /// Only the half-strips on the inner side of the face.
    RaysOnly,
}

/// Number of faces whose foot from `q` lies in the open face; `q` may be
/// any point.
pub fn stable_count_at(poly: &ConvexPolyhedron3, q: Point3) -> usize {
    (0..poly.face_count())
        .filter(|&f| face_margin(poly, f, poly.plane(f).project(q)) > 0.0)
        .count()
}

/// Exact internal robustness in 3D.
///
/// A face gains or loses its stable point exactly when the foot of the
/// reference crosses one of its edges, i.e. when the reference crosses the
/// wall spanned by that edge and the face normal. The value is the distance
/// to the nearest wall divided by the square root of the surface area.
pub fn rho_in_exact_3d(
    poly: &ConvexPolyhedron3,
    p: Point3,
    mode: WallMode,
) -> Result<RobustnessReport3> {
    let set = classify3(poly, p)?;
    if set.is_degenerate() {
        return Err(Error::DegenerateConfiguration(
            "reference point lies on a wall".into(),
        ));
    }
    let edge_index: HashMap<(usize, usize), usize> = poly
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| ((e.a, e.b), i))
        .collect();
    let verts = poly.vertices();
    let mut best: Option<(f64, usize, usize, Point3)> = None;
    for (f, face) in poly.faces().iter().enumerate() {
        let n = poly.plane(f).normal;
        let k = face.len();
        for i in 0..k {
            let (ia, ib) = (face[i], face[(i + 1) % k]);
            let (a, b) = (verts[ia], verts[ib]);
            let len = a.dist(b);
            let dir = (b - a) / len;
            let w = p - a;
            let s = w.dot(dir).clamp(0.0, len);
            let mut t = w.dot(n);
            if mode == WallMode::RaysOnly {
                t = t.min(0.0);
            }
            let nearest = a + dir * s + n * t;
            let dist = p.dist(nearest);
            if best.is_none_or(|(d, ..)| dist < d) {
                best = Some((dist, f, edge_index[&(ia.min(ib), ia.max(ib))], nearest));
            }
        }
    }
    let (dist, face, edge, nearest) = best.expect("polyhedron has faces");
    let (s, h, u) = set.counts();
    Ok(RobustnessReport3 {
        kind: RobustnessKind3::Internal,
        value: dist / poly.surface_area().sqrt(),
        witness: Witness3::Wall {
            face,
            edge,
            nearest,
        },
        method: Method::Exact,
        upper_bound: false,
        counts: [s, h, u],
        notes: Vec::new(),
    })
}

/// Distance along `u` to the first change of the stable count, if it occurs
/// within `reach`.
fn first_change(
    poly: &ConvexPolyhedron3,
    p: Point3,
    base: usize,
    u: Point3,
    reach: f64,
    tol: f64,
) -> Option<f64> {
    let step = poly.diameter() / 2048.0;
    let changed = |t: f64| stable_count_at(poly, p + u * t) != base;
    let mut lo = 0.0;
    let mut hi = step;
    while !changed(hi) {
        if hi > reach {
            return None;
        }
        lo = hi;
        hi += step;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if changed(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Compass search on the sphere around `u`, starting at angular step
/// `angle`. Only improvements are accepted, so the result stays a point
/// where the count actually changes.
fn polish(
    poly: &ConvexPolyhedron3,
    p: Point3,
    base: usize,
    mut u: Point3,
    mut best: f64,
    mut angle: f64,
    tol: f64,
) -> (f64, Point3) {
    let mut rounds = 0;
    while angle > 1e-7 && rounds < 400 {
        rounds += 1;
        let e1 = u.any_orthogonal();
        let e2 = u.cross(e1);
        let mut moved = false;
        for e in [e1, -e1, e2, -e2] {
            let w = (u * angle.cos() + e * angle.sin()).normalized();
            if let Some(t) = first_change(poly, p, base, w, best, tol) {
                if t < best {
                    best = t;
                    u = w;
                    moved = true;
                    break;
                }
            }
        }
        if !moved {
            angle *= 0.5;
        }
    }
    (best, u)
}

/// Directional search for the nearest point with a different stable count.
///
/// Marches along `directions` Fibonacci-sphere directions with a step of
/// `diameter / 2048` and bisects the first bracket to `tol`. The best few
/// directions are then polished by a local compass search, since near the
/// end of a wall the overshoot only shrinks linearly with the direction
/// spacing. Every reported distance is a realized count change.
pub fn rho_in_sampled_3d(
    poly: &ConvexPolyhedron3,
    p: Point3,
    directions: usize,
    tol: f64,
) -> Result<RobustnessReport3> {
    if directions < 128 {
        return Err(Error::InvalidParameter(format!(
            "need at least 128 directions, got {directions}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let base = stable_count_at(poly, p);
    let dirs = fibonacci_sphere(directions);
    let reach = 2.0 * poly.diameter();
    let hits: Vec<f64> = dirs
        .par_iter()
        .map(|&u| first_change(poly, p, base, u, reach, tol).unwrap_or(reach))
        .collect();
    let mut order: Vec<usize> = (0..dirs.len()).collect();
    order.sort_by(|&a, &b| hits[a].total_cmp(&hits[b]).then(a.cmp(&b)));
    let spacing = (4.0 * std::f64::consts::PI / directions as f64).sqrt();
    let polished: Vec<(f64, Point3)> = order[..POLISHED.min(order.len())]
        .par_iter()
        .map(|&k| polish(poly, p, base, dirs[k], hits[k], spacing, tol))
        .collect();
    let (value, direction) =
        polished
            .into_iter()
            .fold((f64::INFINITY, Point3::ORIGIN), |acc, c| {
                if c.0 < acc.0 {
                    c
                } else {
                    acc
                }
            });
    let counts = match classify3(poly, p) {
        Ok(set) => {
            let (s, h, u) = set.counts();
            [s, h, u]
        }
        Err(_) => [base, 0, 0],
    };
    Ok(RobustnessReport3 {
        kind: RobustnessKind3::Internal,
        value: value / poly.surface_area().sqrt(),
        witness: Witness3::Direction { direction },
        method: Method::Sampled,
        upper_bound: false,
        counts,
        notes: vec![format!(
            "{directions} directions, {POLISHED} polished, bisection tolerance {tol:e}"
        )],
    })
}

/// Number of best sampled directions refined by local search.
const POLISHED: usize = 8;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3d::{platonic, Platonic, PlatonicScale};

    #[test]
    fn platonic_exact_values() {
        let cube = platonic(Platonic::Cube, PlatonicScale::UnitSurface);
        let r = rho_in_exact_3d(&cube, Point3::ORIGIN, WallMode::Strips).unwrap();
        assert!((r.value - 1.0 / (2.0 * 6f64.sqrt())).abs() < 1e-12);
        let tetra = platonic(Platonic::Tetra, PlatonicScale::UnitSurface);
        let r = rho_in_exact_3d(&tetra, Point3::ORIGIN, WallMode::Strips).unwrap();
        assert!((r.value - 0.5 / 3f64.powf(0.75)).abs() < 1e-12);
        let rays = rho_in_exact_3d(&tetra, Point3::ORIGIN, WallMode::RaysOnly).unwrap();
        assert_eq!(rays.value, r.value);
    }

    #[test]
    fn sampled_cube() {
        let cube = platonic(Platonic::Cube, PlatonicScale::UnitSurface);
        let s = rho_in_sampled_3d(&cube, Point3::ORIGIN, 500, 1e-9).unwrap();
        let exact = 1.0 / (2.0 * 6f64.sqrt());
        assert!((s.value - exact).abs() < 5e-3 * exact, "{}", s.value);
        assert!(s.value >= exact - 1e-9);
    }
}
