use std::f64::consts::PI;

use serde::Serialize;

use super::{classify3, rho_in_exact_3d, stable_count_at, RobustnessReport3, WallMode};
use crate::error::Result;
use crate::geom3d::{
    clip_halfspace3, platonic, ConvexPolyhedron3, Mat3, Plane, Platonic, PlatonicScale, Point3,
};
use crate::sampling::fibonacci_sphere;

/// Tilt (radians) of the cut plane away from the plane perpendicular to the
/// vertex axis. A perpendicular cut would create a new stable face.
pub const FIXTURE_TILT: f64 = 55.0 * PI / 180.0;

/// Azimuth (radians) of the tilt hinge about the vertex axis, measured from
/// the plane through the axis and one edge. Symmetric tilts split the old
/// vertex into two unstable points.
pub const FIXTURE_HINGE: f64 = 60.0 * PI / 180.0;

/// Position of the cut along the vertex-to-opposite-face height.
const CUT_FRACTION: f64 = 0.1;

#[derive(Debug, Clone, Serialize)]
pub struct TruncatedTetraFixture {
    #[serde(skip)]
    pub original: ConvexPolyhedron3,
    #[serde(skip)]
    pub truncated: ConvexPolyhedron3,
    pub cut: Plane,
    pub surface_truncated: f64,
    pub counts_original: [usize; 3],
    pub counts_truncated: [usize; 3],
    pub rho_original: RobustnessReport3,
    pub rho_truncated: RobustnessReport3,
    /// Named checks and whether each holds.
    pub checks: Vec<(String, bool)>,
}

impl TruncatedTetraFixture {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Unit-surface regular tetrahedron `P` centred at `o` and a tilted vertex
/// truncation `P'` through the point at 10% of the height from the vertex.
/// Both are evaluated at `o` (each normalized by its own surface area).
pub fn example_truncated_tetra_fixture() -> Result<TruncatedTetraFixture> {
    truncated_tetra(FIXTURE_TILT, FIXTURE_HINGE)
}

pub(crate) fn truncated_tetra(tilt: f64, hinge_angle: f64) -> Result<TruncatedTetraFixture> {
    let p = platonic(Platonic::Tetra, PlatonicScale::UnitSurface);
    let o = Point3::ORIGIN;
    let verts = p.vertices();
    let apex = (0..verts.len())
        .max_by(|&i, &j| {
            verts[i]
                .z
                .total_cmp(&verts[j].z)
                .then(verts[i].x.total_cmp(&verts[j].x))
        })
        .unwrap();
    let v0 = verts[apex];
    let axis = v0.normalized();
    // circumradius is three times the inradius
    let height = v0.norm() * 4.0 / 3.0;
    let through = v0 - axis * (CUT_FRACTION * height);
    let other = verts[(apex + 1) % verts.len()];
    let hinge = Mat3::rotation(axis, hinge_angle).apply(axis.cross(other - v0).normalized());
    let normal = Mat3::rotation(hinge, tilt).apply(axis);
    let cut = Plane::through(through, normal);
    let q = clip_halfspace3(&p, &cut).expect("cut keeps most of the tetrahedron");

    let mut checks = Vec::new();
    let removed_only_apex = verts
        .iter()
        .enumerate()
        .all(|(i, v)| (i == apex) == (cut.signed_distance(*v) > 0.0));
    checks.push((
        "cut removes exactly one vertex".to_string(),
        removed_only_apex,
    ));
    let misses_incircles = (0..p.face_count()).all(|f| {
        let (c, r) = p.face_incircle(f);
        let n = p.plane(f).normal;
        let in_plane = cut.normal - n * cut.normal.dot(n);
        cut.signed_distance(c) + r * in_plane.norm() < 0.0
    });
    checks.push((
        "cut misses every face incircle".to_string(),
        misses_incircles,
    ));
    checks.push(("surface decreases".to_string(), q.surface_area() < 1.0));

    let set_p = classify3(&p, o)?;
    let set_q = classify3(&q, o)?;
    let counts_original = <[usize; 3]>::from(set_p.counts());
    let counts_truncated = <[usize; 3]>::from(set_q.counts());
    checks.push((
        "same (S, H, U) about the center".to_string(),
        !set_q.is_degenerate() && counts_original == counts_truncated,
    ));

    let rho_p = rho_in_exact_3d(&p, o, WallMode::Strips)?;
    let rho_q = rho_in_exact_3d(&q, o, WallMode::Strips)?;
    let reach = 0.999 * rho_p.value;
    let region_ok = fibonacci_sphere(256).into_iter().all(|u| {
        [0.25, 0.5, 0.75, 1.0].iter().all(|&f| {
            let x = o + u * (f * reach);
            stable_count_at(&p, x) == stable_count_at(&q, x)
        })
    });
    checks.push((
        "same stable count throughout the robustness ball".to_string(),
        region_ok,
    ));
    checks.push((
        "internal robustness increases".to_string(),
        rho_q.value > rho_p.value,
    ));

    Ok(TruncatedTetraFixture {
        surface_truncated: q.surface_area(),
        original: p,
        truncated: q,
        cut,
        counts_original,
        counts_truncated,
        rho_original: rho_p,
        rho_truncated: rho_q,
        checks,
    })
}
