use std::f64::consts::PI;

use rayon::prelude::*;

use super::{Method, RobustnessKind, RobustnessReport2, Witness2};
use crate::equilib2d::{equilibria, local_minima_count_lenient};
use crate::error::{Error, Result};
use crate::geom2d::{dist_point_to_line, ConvexPolygon2, Line2, Point2};

/// Which part of the polygon caustic bounds the reference displacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CausticMode {
    /// Full lines through each vertex perpendicular to each incident edge.
    #[default]
    Lines,
    /// Only the inward half lines (inner normals at the vertices).
    RaysOnly,
}

/// Exact internal robustness of a polygon.
///
/// The stable count changes exactly when the foot of the reference point on
/// some edge crosses an endpoint, i.e. when the reference crosses the line
/// through that endpoint perpendicular to the edge. The value is the distance
/// to the nearest such line, divided by the perimeter.
pub fn rho_in_exact(
    poly: &ConvexPolygon2,
    p: Point2,
    mode: CausticMode,
) -> Result<RobustnessReport2> {
    let set = equilibria(poly, p)?;
    if set.is_degenerate() {
        return Err(Error::DegenerateConfiguration(
            "reference point lies on the caustic".into(),
        ));
    }
    let n = poly.len();
    let mut best: Option<(f64, usize, usize, Point2)> = None;
    for edge in 0..n {
        let (a, b) = poly.edge(edge);
        let dir = (b - a).normalized();
        for (vertex, v) in [(edge, a), ((edge + 1) % n, b)] {
            let line = Line2::new(v, dir.perp());
            let behind = (p - v).dot(line.direction) < 0.0;
            let (dist, nearest) = match mode {
                CausticMode::RaysOnly if behind => (p.dist(v), v),
                _ => (dist_point_to_line(p, &line), line.project(p)),
            };
            if best.is_none_or(|(d, ..)| dist < d) {
                best = Some((dist, vertex, edge, nearest));
            }
        }
    }
    let (dist, vertex, edge, nearest) = best.expect("polygon has edges");
    Ok(RobustnessReport2 {
        kind: RobustnessKind::Internal,
        value: dist / poly.perimeter(),
        witness: Witness2::CausticLine {
            vertex,
            edge,
            nearest,
        },
        method: Method::Exact,
        upper_bound: false,
        stable_count: set.stable,
        notes: Vec::new(),
    })
}

/// Directional search for the nearest reference point with a different
/// number of boundary-distance local minima.
///
/// Marches from `p` along `directions` evenly spaced rays with a step of
/// `diameter / 2048`, then bisects the first bracket to `tol`. The result is
/// normalized by the perimeter. Since only a subset of directions is probed,
/// it can only overestimate the exact value (up to `tol`).
pub fn rho_in_sampled(
    poly: &ConvexPolygon2,
    p: Point2,
    directions: usize,
    tol: f64,
) -> Result<RobustnessReport2> {
    if directions < 64 {
        return Err(Error::InvalidParameter(format!(
            "need at least 64 directions, got {directions}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let base = local_minima_count_lenient(poly, p);
    let step = poly.diameter() / 2048.0;
    let reach = 2.0 * poly.diameter();
    let hits: Vec<f64> = (0..directions)
        .into_par_iter()
        .map(|k| {
            let u = Point2::from_angle(2.0 * PI * k as f64 / directions as f64);
            let changed = |t: f64| local_minima_count_lenient(poly, p + u * t) != base;
            let mut lo = 0.0;
            let mut hi = step;
            while hi <= reach && !changed(hi) {
                lo = hi;
                hi += step;
            }
            if hi > reach {
                return reach;
            }
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if changed(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect();
    let (k, dist) =
        hits.iter()
            .copied()
            .enumerate()
            .fold(
                (0, f64::INFINITY),
                |(bk, bd), (k, d)| if d < bd { (k, d) } else { (bk, bd) },
            );
    Ok(RobustnessReport2 {
        kind: RobustnessKind::Internal,
        value: dist / poly.perimeter(),
        witness: Witness2::Direction {
            angle: 2.0 * PI * k as f64 / directions as f64,
        },
        method: Method::Sampled,
        upper_bound: false,
        stable_count: base,
        notes: Vec::new(),
    })
}
