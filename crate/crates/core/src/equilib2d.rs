//! Equilibrium points of a convex polygon with respect to a reference point.
//!
//! Along an edge `[a, b]` the distance to `p` is minimal at the orthogonal
//! foot of `p`, so the edge carries a stable point iff that foot lies in the
//! open edge. A vertex is unstable iff `p - v` makes an acute angle with both
//! incident edges oriented away from `v`. Both tests reduce to signs of the
//! same projections, which is why stable and unstable points alternate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::{ConvexPolygon2, Point2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind2 {
    Stable,
    Unstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Carrier2 {
    Edge(usize),
    Vertex(usize),
}

impl Carrier2 {
    pub fn index(self) -> usize {
        match self {
            Carrier2::Edge(i) | Carrier2::Vertex(i) => i,
        }
    }

    /// Position along the boundary: vertex `i` at `2i`, edge `i` at `2i + 1`.
    fn boundary_rank(self) -> usize {
        match self {
            Carrier2::Vertex(i) => 2 * i,
            Carrier2::Edge(i) => 2 * i + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumPoint2 {
    pub kind: Kind2,
    pub location: Point2,
    pub carrier: Carrier2,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumSet2 {
    /// Boundary order, starting at vertex 0.
    pub points: Vec<EquilibriumPoint2>,
    pub stable: usize,
    pub unstable: usize,
    pub reference: Point2,
}

impl EquilibriumSet2 {
    pub fn is_degenerate(&self) -> bool {
        self.points.iter().any(|p| p.degenerate)
    }

    pub fn stable_points(&self) -> impl Iterator<Item = &EquilibriumPoint2> {
        self.points.iter().filter(|p| p.kind == Kind2::Stable)
    }

    pub fn unstable_points(&self) -> impl Iterator<Item = &EquilibriumPoint2> {
        self.points.iter().filter(|p| p.kind == Kind2::Unstable)
    }
}

fn check_reference(poly: &ConvexPolygon2, p: Point2) -> Result<()> {
    if !p.is_finite() || !poly.contains_strictly(p) {
        return Err(Error::ReferenceOutside);
    }
    Ok(())
}

/// Foot of `p` on edge `i` as (position along the edge, edge length).
fn edge_foot(poly: &ConvexPolygon2, i: usize, p: Point2) -> (f64, f64) {
    let (a, b) = poly.edge(i);
    let e = b - a;
    let len = e.norm();
    ((p - a).dot(e) / len, len)
}

fn stable_unchecked(poly: &ConvexPolygon2, p: Point2) -> Vec<EquilibriumPoint2> {
    let eps = poly.eps();
    (0..poly.len())
        .filter_map(|i| {
            let (s, len) = edge_foot(poly, i, p);
            if s < -eps || s > len + eps {
                return None;
            }
            let degenerate = s <= eps || s >= len - eps;
            let (a, b) = poly.edge(i);
            Some(EquilibriumPoint2 {
                kind: Kind2::Stable,
                location: a + (b - a) * (s / len).clamp(0.0, 1.0),
                carrier: Carrier2::Edge(i),
                degenerate,
            })
        })
        .collect()
}

/// Projections of `p - v` onto the two edges leaving vertex `i`.
fn vertex_projections(poly: &ConvexPolygon2, i: usize, p: Point2) -> (f64, f64) {
    let n = poly.len();
    let v = poly.vertex(i);
    let next = poly.vertex(i + 1) - v;
    let prev = poly.vertex(i + n - 1) - v;
    let w = p - v;
    (w.dot(next) / next.norm(), w.dot(prev) / prev.norm())
}

fn unstable_unchecked(poly: &ConvexPolygon2, p: Point2) -> Vec<EquilibriumPoint2> {
    let eps = poly.eps();
    (0..poly.len())
        .filter_map(|i| {
            let (a, b) = vertex_projections(poly, i, p);
            if a < -eps || b < -eps {
                return None;
            }
            Some(EquilibriumPoint2 {
                kind: Kind2::Unstable,
                location: poly.vertex(i),
                carrier: Carrier2::Vertex(i),
                degenerate: a <= eps || b <= eps,
            })
        })
        .collect()
}

/// Stable points: one per edge whose foot from `p` lies in the open edge.
/// Feet within tolerance of an endpoint are returned flagged degenerate.
pub fn stable_points(poly: &ConvexPolygon2, p: Point2) -> Result<Vec<EquilibriumPoint2>> {
    check_reference(poly, p)?;
    Ok(stable_unchecked(poly, p))
}

/// Unstable points: vertices where `p - v` is strictly acute to both incident
/// edges. Right angles within tolerance are flagged degenerate.
pub fn unstable_points(poly: &ConvexPolygon2, p: Point2) -> Result<Vec<EquilibriumPoint2>> {
    check_reference(poly, p)?;
    Ok(unstable_unchecked(poly, p))
}

/// All equilibria in boundary order, with the alternation of kinds verified
/// whenever no point is degenerate.
pub fn equilibria(poly: &ConvexPolygon2, p: Point2) -> Result<EquilibriumSet2> {
    check_reference(poly, p)?;
    let mut points = stable_unchecked(poly, p);
    points.extend(unstable_unchecked(poly, p));
    points.sort_by_key(|e| e.carrier.boundary_rank());
    let stable = points.iter().filter(|e| e.kind == Kind2::Stable).count();
    let unstable = points.len() - stable;
    let set = EquilibriumSet2 {
        points,
        stable,
        unstable,
        reference: p,
    };
    if !set.is_degenerate() {
        let n = set.points.len();
        let alternates =
            n > 0 && (0..n).all(|i| set.points[i].kind != set.points[(i + 1) % n].kind);
        if !alternates || stable != unstable {
            return Err(Error::DegenerateConfiguration(format!(
                "stable/unstable points do not alternate (S={stable}, U={unstable})"
            )));
        }
    }
    Ok(set)
}

/// Number of stable points of `poly` with respect to its own centroid, or
/// `None` if the configuration is degenerate.
pub fn centroid_stable_count(poly: &ConvexPolygon2) -> Option<usize> {
    match equilibria(poly, poly.centroid()) {
        Ok(set) if !set.is_degenerate() => Some(set.stable),
        _ => None,
    }
}

/// Number of nondegenerate local minima of `z ↦ |z - q|` over the boundary,
/// for an arbitrary point `q` (inside or outside).
///
/// Outside the polygon a vertex can become a local minimum when both incident
/// edges lead away from `q`. Returns `None` when any candidate lies within
/// tolerance of a transition.
pub fn local_minima_count(poly: &ConvexPolygon2, q: Point2) -> Option<usize> {
    let eps = poly.eps();
    let mut count = 0;
    for i in 0..poly.len() {
        let (s, len) = edge_foot(poly, i, q);
        if s.abs() <= eps || (s - len).abs() <= eps {
            return None;
        }
        if s > 0.0 && s < len {
            count += 1;
        }
        let (a, b) = vertex_projections(poly, i, q);
        if a < 0.0 && b < 0.0 {
            count += 1;
        }
    }
    Some(count)
}

/// Like [`local_minima_count`] but never fails: boundary cases count as not
/// being minima. Used by directional bisection.
pub(crate) fn local_minima_count_lenient(poly: &ConvexPolygon2, q: Point2) -> usize {
    let mut count = 0;
    for i in 0..poly.len() {
        let (s, len) = edge_foot(poly, i, q);
        if s > 0.0 && s < len {
            count += 1;
        }
        let (a, b) = vertex_projections(poly, i, q);
        if a < 0.0 && b < 0.0 {
            count += 1;
        }
    }
    count
}
