//! Face, edge and vertex equilibria of convex polyhedra and the robustness
//! of their counts.

mod fixture;
mod internal;
mod predicates;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::Side;
use crate::geom3d::{ConvexPolyhedron3, Point3};
use crate::robust2d::Method;

pub use fixture::{example_truncated_tetra_fixture, TruncatedTetraFixture, FIXTURE_TILT};
pub use internal::{rho_in_exact_3d, rho_in_sampled_3d, stable_count_at, WallMode};
pub use predicates::{
    bounding_box_predicates, centroid_quarter_width_check, BoxPredicates, PredicateOutcome,
};
pub use search::{plane_truncation_search, PlaneGrid, ReductionTarget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RobustnessKind3 {
    Internal,
    /// Truncation bound for losing a stable point.
    PartialStable,
    /// Truncation bound for losing an unstable point.
    PartialUnstable,
    /// Truncation bound for losing either.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness3 {
    /// Wall through `edge` perpendicular to `face`.
    Wall {
        face: usize,
        edge: usize,
        nearest: Point3,
    },
    Direction {
        direction: Point3,
    },
    /// Cutting plane `{x : normal·x = offset}`; `side` is the retained piece.
    Plane {
        normal: Point3,
        offset: f64,
        side: Side,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessReport3 {
    pub kind: RobustnessKind3,
    /// Internal values are divided by the square root of the surface area;
    /// truncation values are volume fractions.
    pub value: f64,
    pub witness: Witness3,
    pub method: Method,
    pub upper_bound: bool,
    /// `[S, H, U]` of the body about the reference point.
    pub counts: [usize; 3],
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind3 {
    Stable,
    Saddle,
    Unstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "index", rename_all = "snake_case")]
pub enum Carrier3 {
    Face(usize),
    Edge(usize),
    Vertex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumPoint3 {
    pub kind: Kind3,
    /// Foot point for faces and edges, the vertex itself otherwise.
    pub location: Point3,
    pub carrier: Carrier3,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumSet3 {
    pub reference: Point3,
    pub stable: Vec<EquilibriumPoint3>,
    pub saddle: Vec<EquilibriumPoint3>,
    pub unstable: Vec<EquilibriumPoint3>,
}

impl EquilibriumSet3 {
    /// `(S, H, U)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.stable.len(), self.saddle.len(), self.unstable.len())
    }

    pub fn points(&self) -> impl Iterator<Item = &EquilibriumPoint3> {
        self.stable.iter().chain(&self.saddle).chain(&self.unstable)
    }

    pub fn is_degenerate(&self) -> bool {
        self.points().any(|e| e.degenerate)
    }
}

/// Classifies every face, edge and vertex with respect to `p`.
///
/// Items within tolerance of a boundary case are kept and flagged
/// degenerate.
pub fn classify3(poly: &ConvexPolyhedron3, p: Point3) -> Result<EquilibriumSet3> {
    if !p.is_finite() || !poly.contains_strictly(p) {
        return Err(Error::ReferenceOutside);
    }
    let eps = poly.eps();
    let verts = poly.vertices();

    let mut stable = Vec::new();
    for f in 0..poly.face_count() {
        let plane = poly.plane(f);
        let foot = plane.project(p);
        let margin = face_margin(poly, f, foot);
        if margin >= -eps {
            stable.push(EquilibriumPoint3 {
                kind: Kind3::Stable,
                location: foot,
                carrier: Carrier3::Face(f),
                degenerate: margin <= eps,
            });
        }
    }

    let mut saddle = Vec::new();
    for (i, e) in poly.edges().iter().enumerate() {
        let (a, b) = (verts[e.a], verts[e.b]);
        let len = a.dist(b);
        let dir = (b - a) / len;
        let s = (p - a).dot(dir);
        let foot = a + dir * s;
        let (alpha, beta) = wedge_coordinates(
            foot - p,
            poly.plane(e.faces[0]).normal,
            poly.plane(e.faces[1]).normal,
        );
        let margin = s.min(len - s).min(alpha).min(beta);
        if margin >= -eps {
            saddle.push(EquilibriumPoint3 {
                kind: Kind3::Saddle,
                location: foot,
                carrier: Carrier3::Edge(i),
                degenerate: margin <= eps,
            });
        }
    }

    let mut unstable = Vec::new();
    for (i, &v) in verts.iter().enumerate() {
        let w = v - p;
        let worst = poly
            .neighbors(i)
            .iter()
            .map(|&u| w.dot((verts[u] - v).normalized()))
            .fold(f64::NEG_INFINITY, f64::max);
        if worst <= eps {
            unstable.push(EquilibriumPoint3 {
                kind: Kind3::Unstable,
                location: v,
                carrier: Carrier3::Vertex(i),
                degenerate: worst >= -eps,
            });
        }
    }
    Ok(EquilibriumSet3 {
        reference: p,
        stable,
        saddle,
        unstable,
    })
}

/// Smallest in-plane distance from `x` to the edge lines of face `f`,
/// positive inside the face.
pub(crate) fn face_margin(poly: &ConvexPolyhedron3, f: usize, x: Point3) -> f64 {
    let n = poly.plane(f).normal;
    let face = &poly.faces()[f];
    let k = face.len();
    (0..k)
        .map(|i| {
            let a = poly.vertices()[face[i]];
            let b = poly.vertices()[face[(i + 1) % k]];
            n.cross((b - a).normalized()).dot(x - a)
        })
        .fold(f64::INFINITY, f64::min)
}

/// `(α, β)` with `v = α n1 + β n2` (least squares in the span).
fn wedge_coordinates(v: Point3, n1: Point3, n2: Point3) -> (f64, f64) {
    let c = n1.dot(n2);
    let det = 1.0 - c * c;
    let (d1, d2) = (v.dot(n1), v.dot(n2));
    ((d1 - c * d2) / det, (d2 - c * d1) / det)
}

/// Centroid-referenced counts `(S, H, U)`, `None` when degenerate.
pub fn centroid_counts(poly: &ConvexPolyhedron3) -> Option<(usize, usize, usize)> {
    match classify3(poly, poly.centroid()) {
        Ok(set) if !set.is_degenerate() => Some(set.counts()),
        _ => None,
    }
}

/// `S - H + U = 2`.
pub fn poincare_hopf_check(set: &EquilibriumSet3) -> Result<bool> {
    if set.is_degenerate() {
        return Err(Error::DegeneratePresent);
    }
    let (s, h, u) = set.counts();
    Ok(s as i64 - h as i64 + u as i64 == 2)
}

/// Class label `{S, U}`; the saddle count follows as `S + U - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EquilibriumClass {
    #[serde(rename = "S")]
    pub stable: usize,
    #[serde(rename = "U")]
    pub unstable: usize,
}

impl EquilibriumClass {
    pub fn new(stable: usize, unstable: usize) -> Result<Self> {
        if stable == 0 || unstable == 0 {
            return Err(Error::InvalidParameter(format!(
                "class {{{stable},{unstable}}} is empty"
            )));
        }
        Ok(EquilibriumClass { stable, unstable })
    }

    pub fn saddles(&self) -> usize {
        self.stable + self.unstable - 2
    }

    pub fn of(set: &EquilibriumSet3) -> Result<Self> {
        if set.is_degenerate() {
            return Err(Error::DegeneratePresent);
        }
        Self::new(set.stable.len(), set.unstable.len())
    }
}

/// Class of the solid ellipsoid with semi-axes `a, b, c` about its center:
/// stable at the ends of the shortest axis, saddles at the middle one and
/// unstable at the longest. Repeated axes give continua of equilibria.
pub fn ellipsoid_class(a: f64, b: f64, c: f64) -> Result<EquilibriumClass> {
    if [a, b, c].iter().any(|&x| !(x > 0.0 && x.is_finite())) {
        return Err(Error::InvalidParameter("semi-axes must be positive".into()));
    }
    let tol = 1e-12 * a.max(b).max(c);
    if (a - b).abs() <= tol || (b - c).abs() <= tol || (a - c).abs() <= tol {
        return Err(Error::DegenerateConfiguration("repeated semi-axes".into()));
    }
    EquilibriumClass::new(2, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3d::{generator_prism, hull3, platonic, Platonic, PlatonicScale};

    fn brick(a: f64, b: f64, c: f64) -> ConvexPolyhedron3 {
        let pts: Vec<Point3> = (0..8)
            .map(|i| {
                Point3::new(
                    a * (i & 1) as f64,
                    b * ((i >> 1) & 1) as f64,
                    c * ((i >> 2) & 1) as f64,
                )
            })
            .collect();
        hull3(&pts).unwrap()
    }

    #[test]
    fn bricks_and_platonics() {
        let b = brick(1.0, 2.0, 7.0);
        let set = classify3(&b, Point3::new(0.5, 1.0, 3.5)).unwrap();
        assert_eq!(set.counts(), (6, 12, 8));
        assert!(poincare_hopf_check(&set).unwrap());
        for kind in Platonic::ALL {
            let p = platonic(kind, PlatonicScale::UnitSurface);
            let (f, e, v) = kind.counts();
            assert_eq!(classify3(&p, Point3::ORIGIN).unwrap().counts(), (f, e, v));
        }
    }

    #[test]
    fn off_center_loses_equilibria() {
        let b = brick(1.0, 1.0, 1.0);
        let set = classify3(&b, Point3::new(0.5, 0.5, 0.5)).unwrap();
        assert!(!set.is_degenerate());
        // on the plane x = 0.5 the x-directed edges have feet at their midpoints
        let set = classify3(&b, Point3::new(0.9, 0.5, 0.2)).unwrap();
        assert!(poincare_hopf_check(&set).unwrap());
        let tall = generator_prism(6, 10.0).unwrap();
        let set = classify3(&tall, Point3::new(0.0, 0.0, 0.0)).unwrap();
        assert_eq!(set.counts(), (8, 18, 12));
    }

    #[test]
    fn outside_and_degenerate() {
        let b = brick(1.0, 1.0, 1.0);
        assert_eq!(
            classify3(&b, Point3::new(2.0, 0.5, 0.5)),
            Err(Error::ReferenceOutside)
        );
        let set = classify3(&b, Point3::new(0.5, 0.5, 0.25)).unwrap();
        assert!(!set.is_degenerate());
        let set = classify3(&b, Point3::new(0.5, 0.5, 0.5 + 1e-13)).unwrap();
        assert!(!set.is_degenerate());
        let hand = EquilibriumClass::new(2, 2).unwrap();
        assert_eq!(hand.saddles(), 2);
    }

    #[test]
    fn ellipsoid() {
        assert_eq!(
            ellipsoid_class(1.0, 2.0, 4.0).unwrap(),
            EquilibriumClass {
                stable: 2,
                unstable: 2
            }
        );
        assert!(matches!(
            ellipsoid_class(1.0, 1.0, 2.0),
            Err(Error::DegenerateConfiguration(_))
        ));
        assert!(ellipsoid_class(0.0, 1.0, 2.0).is_err());
    }
}
