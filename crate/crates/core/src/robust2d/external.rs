use std::f64::consts::PI;

use super::{Method, RobustnessKind, RobustnessReport2, Witness2};
use crate::equilib2d::equilibria;
use crate::error::{Error, Result};
use crate::geom2d::{area_outside_disk, clip_halfplane, ConvexPolygon2, Line2, Point2, Side};

/// The part of the polygon angularly between two consecutive stable points.
#[derive(Debug, Clone, PartialEq)]
pub struct ExternalSector {
    /// Angle at the reference point from stable point `i` to `i + 1`.
    pub angle: f64,
    /// `max(|s_i - p|, |s_{i+1} - p|)`.
    pub radius: f64,
    pub area: f64,
    /// Area of the sector farther than `radius` from the reference point.
    pub area_outside: f64,
}

/// Wedge pieces `{z : u, z - p, w counterclockwise}` for an opening angle
/// below π.
fn wedge(poly: &ConvexPolygon2, p: Point2, u: Point2, w: Point2) -> Option<ConvexPolygon2> {
    let first = clip_halfplane(poly, &Line2::new(p, u), Side::Positive)?;
    clip_halfplane(&first, &Line2::new(p, w), Side::Negative)
}

/// Sectors between consecutive stable points, counterclockwise.
///
/// Each sector is split along its angle bisector so both halves are convex
/// wedges, which also covers sectors opening wider than π.
pub fn external_sectors(poly: &ConvexPolygon2, p: Point2) -> Result<Vec<ExternalSector>> {
    let set = equilibria(poly, p)?;
    if set.is_degenerate() {
        return Err(Error::DegenerateConfiguration(
            "degenerate equilibrium present".into(),
        ));
    }
    let feet: Vec<Point2> = set.stable_points().map(|e| e.location).collect();
    let s = feet.len();
    if s < 3 {
        return Err(Error::TooFewStable(s));
    }
    let mut sectors = Vec::with_capacity(s);
    for i in 0..s {
        let a = feet[i] - p;
        let b = feet[(i + 1) % s] - p;
        let mut angle = a.cross(b).atan2(a.dot(b));
        if angle <= 0.0 {
            angle += 2.0 * PI;
        }
        let u = a.normalized();
        let w = b.normalized();
        let m = u.rotated(0.5 * angle);
        let radius = a.norm().max(b.norm());
        let mut area = 0.0;
        let mut area_outside = 0.0;
        for piece in [wedge(poly, p, u, m), wedge(poly, p, m, w)]
            .into_iter()
            .flatten()
        {
            area += piece.area();
            area_outside += area_outside_disk(&piece, p, radius);
        }
        sectors.push(ExternalSector {
            angle,
            radius,
            area,
            area_outside,
        });
    }
    Ok(sectors)
}

/// Exact external robustness: the smallest sector excess area (outside the
/// disk through the farther of its two stable points) relative to the
/// polygon area. Removing that excess is the cheapest way to merge two
/// neighbouring stable points while the reference stays fixed.
pub fn rho_ex_exact(poly: &ConvexPolygon2, p: Point2) -> Result<RobustnessReport2> {
    let sectors = external_sectors(poly, p)?;
    let mut best = 0;
    for (i, sec) in sectors.iter().enumerate() {
        if sec.area_outside < sectors[best].area_outside - 1e-12 * poly.area() {
            best = i;
        }
    }
    let notes = sectors
        .iter()
        .enumerate()
        .filter(|(_, s)| s.angle >= PI)
        .map(|(i, s)| format!("sector {i} opens {:.6} rad (at least π)", s.angle))
        .collect();
    Ok(RobustnessReport2 {
        kind: RobustnessKind::External,
        value: sectors[best].area_outside / poly.area(),
        witness: Witness2::Sector {
            index: best,
            radius: sectors[best].radius,
        },
        method: Method::Exact,
        upper_bound: false,
        stable_count: sectors.len(),
        notes,
    })
}
