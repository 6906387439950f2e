use std::f64::consts::PI;

use rayon::prelude::*;

use super::{Method, RobustnessKind, RobustnessReport2, Witness2};
use crate::equilib2d::centroid_stable_count;
use crate::error::{Error, Result};
use crate::geom2d::{clip_halfplane, ConvexPolygon2, Line2, Point2, Side};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSearchConfig {
    /// Number of line directions in `[0, π)`.
    pub grid_theta: usize,
    /// Number of offset cells across the support width; the interior grid
    /// points `1..grid_offset` are probed.
    pub grid_offset: usize,
    /// Offset bisection tolerance, relative to the polygon diameter. Zero
    /// disables refinement.
    pub refine_tol: f64,
}

impl Default for LineSearchConfig {
    fn default() -> Self {
        LineSearchConfig {
            grid_theta: 180,
            grid_offset: 64,
            refine_tol: 1e-9,
        }
    }
}

struct Candidate {
    removed: f64,
    theta: f64,
    offset: f64,
    side: Side,
}

/// Fraction of area removed when keeping `side` of the line, if the retained
/// piece has fewer stable points (about its own centroid) than `target`.
fn reducing_cut(
    poly: &ConvexPolygon2,
    area: f64,
    target: usize,
    line: &Line2,
    side: Side,
) -> Option<f64> {
    let piece = clip_halfplane(poly, line, side)?;
    match centroid_stable_count(&piece) {
        Some(s) if s < target => Some(1.0 - piece.area() / area),
        _ => None,
    }
}

fn search_direction(
    poly: &ConvexPolygon2,
    area: f64,
    target: usize,
    theta: f64,
    cfg: &LineSearchConfig,
) -> Option<Candidate> {
    let n = Point2::from_angle(theta);
    let (lo, hi) = poly.support(n);
    let width = hi - lo;
    let offset_at = |k: usize| lo + width * k as f64 / cfg.grid_offset as f64;
    let tol = cfg.refine_tol * poly.diameter();
    let mut best: Option<Candidate> = None;
    // Keeping the negative side removes little near `hi`; keeping the
    // positive side removes little near `lo`. Walk inwards from the cheap end.
    for side in [Side::Negative, Side::Positive] {
        let order: Vec<usize> = match side {
            Side::Negative => (1..cfg.grid_offset).rev().collect(),
            Side::Positive => (1..cfg.grid_offset).collect(),
        };
        let mut free = match side {
            Side::Negative => hi,
            Side::Positive => lo,
        };
        for k in order {
            let d = offset_at(k);
            let line = Line2::from_normal_offset(theta, d);
            let Some(mut removed) = reducing_cut(poly, area, target, &line, side) else {
                free = d;
                continue;
            };
            let mut hit = d;
            if tol > 0.0 {
                while (hit - free).abs() > tol {
                    let mid = 0.5 * (hit + free);
                    match reducing_cut(
                        poly,
                        area,
                        target,
                        &Line2::from_normal_offset(theta, mid),
                        side,
                    ) {
                        Some(r) => {
                            hit = mid;
                            removed = r;
                        }
                        None => free = mid,
                    }
                }
            }
            if best.as_ref().is_none_or(|b| removed < b.removed) {
                best = Some(Candidate {
                    removed,
                    theta,
                    offset: hit,
                    side,
                });
            }
            break;
        }
    }
    best
}

/// Upper bound on the full robustness from single-line truncations.
///
/// Scans `grid_theta × grid_offset` cutting lines, keeps either piece, and
/// recomputes the stable count about the piece's own centroid. For every
/// direction the first reducing grid offset (from the cheap end) is refined
/// by bisection against the last non-reducing one. Single cuts are a
/// subfamily of all convex truncations, hence the result is an upper bound.
pub fn full_robustness_line_bound(
    poly: &ConvexPolygon2,
    cfg: LineSearchConfig,
) -> Result<RobustnessReport2> {
    if cfg.grid_theta == 0 || cfg.grid_offset < 2 {
        return Err(Error::InvalidParameter(
            "grid needs >= 1 direction and >= 2 offset cells".into(),
        ));
    }
    if !(cfg.refine_tol >= 0.0) {
        return Err(Error::InvalidParameter(
            "refine_tol must be non-negative".into(),
        ));
    }
    let target = centroid_stable_count(poly).ok_or_else(|| {
        Error::DegenerateConfiguration("degenerate equilibria about the centroid".into())
    })?;
    let area = poly.area();
    let found: Vec<Option<Candidate>> = (0..cfg.grid_theta)
        .into_par_iter()
        .map(|j| {
            search_direction(
                poly,
                area,
                target,
                PI * j as f64 / cfg.grid_theta as f64,
                &cfg,
            )
        })
        .collect();
    let best = found
        .into_iter()
        .flatten()
        .fold(None::<Candidate>, |acc, c| match acc {
            Some(a) if a.removed <= c.removed => Some(a),
            _ => Some(c),
        })
        .ok_or(Error::NoReductionFound)?;
    Ok(RobustnessReport2 {
        kind: RobustnessKind::FullLineBound,
        value: best.removed,
        witness: Witness2::CuttingLine {
            theta: best.theta,
            offset: best.offset,
            side: best.side,
        },
        method: Method::Search,
        upper_bound: true,
        stable_count: target,
        notes: vec![format!(
            "grid_theta={} grid_offset={} refine_tol={:e}",
            cfg.grid_theta, cfg.grid_offset, cfg.refine_tol
        )],
    })
}
