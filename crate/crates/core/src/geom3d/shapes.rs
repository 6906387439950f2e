use std::f64::consts::PI;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::hull::hull3;
use super::point::Point3;
use super::polyhedron::{polyhedron_new, ConvexPolyhedron3};
use crate::error::{Error, Result};
use crate::sampling::fibonacci_sphere;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Platonic {
    Tetra,
    Cube,
    Octa,
    Dodeca,
    Icosa,
}

impl Platonic {
    pub const ALL: [Platonic; 5] = [
        Self::Tetra,
        Self::Cube,
        Self::Octa,
        Self::Dodeca,
        Self::Icosa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Tetra => "tetra",
            Self::Cube => "cube",
            Self::Octa => "octa",
            Self::Dodeca => "dodeca",
            Self::Icosa => "icosa",
        }
    }

    /// `(F, E, V)`.
    pub fn counts(self) -> (usize, usize, usize) {
        match self {
            Self::Tetra => (4, 6, 4),
            Self::Cube => (6, 12, 8),
            Self::Octa => (8, 12, 6),
            Self::Dodeca => (12, 30, 20),
            Self::Icosa => (20, 30, 12),
        }
    }
}

impl FromStr for Platonic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown platonic solid '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlatonicScale {
    /// Surface area 1.
    UnitSurface,
    /// Edge length.
    Edge(f64),
}

fn signs(k: usize) -> impl Iterator<Item = Vec<f64>> {
    (0..1usize << k).map(move |m| {
        (0..k)
            .map(|i| if m >> i & 1 == 1 { -1.0 } else { 1.0 })
            .collect()
    })
}

fn raw_vertices(kind: Platonic) -> Vec<Point3> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut v = Vec::new();
    match kind {
        Platonic::Tetra => {
            for [x, y, z] in [
                [1.0, 1.0, 1.0],
                [1.0, -1.0, -1.0],
                [-1.0, 1.0, -1.0],
                [-1.0, -1.0, 1.0],
            ] {
                v.push(Point3::new(x, y, z));
            }
        }
        Platonic::Cube => {
            for s in signs(3) {
                v.push(Point3::new(s[0], s[1], s[2]));
            }
        }
        Platonic::Octa => {
            for s in [1.0, -1.0] {
                v.push(Point3::new(s, 0.0, 0.0));
                v.push(Point3::new(0.0, s, 0.0));
                v.push(Point3::new(0.0, 0.0, s));
            }
        }
        Platonic::Dodeca => {
            for s in signs(3) {
                v.push(Point3::new(s[0], s[1], s[2]));
            }
            for s in signs(2) {
                let (a, b) = (s[0] / phi, s[1] * phi);
                v.push(Point3::new(0.0, a, b));
                v.push(Point3::new(a, b, 0.0));
                v.push(Point3::new(b, 0.0, a));
            }
        }
        Platonic::Icosa => {
            for s in signs(2) {
                let (a, b) = (s[0], s[1] * phi);
                v.push(Point3::new(0.0, a, b));
                v.push(Point3::new(a, b, 0.0));
                v.push(Point3::new(b, 0.0, a));
            }
        }
    }
    v
}

/// Regular polyhedron centred at the origin.
pub fn platonic(kind: Platonic, scale: PlatonicScale) -> ConvexPolyhedron3 {
    let raw = hull3(&raw_vertices(kind)).expect("platonic vertex set is a valid hull");
    let s = match scale {
        PlatonicScale::UnitSurface => 1.0 / raw.surface_area().sqrt(),
        PlatonicScale::Edge(a) => {
            let e = raw.edges()[0];
            a / raw.vertices()[e.a].dist(raw.vertices()[e.b])
        }
    };
    raw.scaled(s).expect("scaling preserves validity")
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be positive, got {v}"
        )))
    }
}

/// Right prism over a regular `ngon` of circumradius 1, centred at the origin.
pub fn generator_prism(ngon: usize, height: f64) -> Result<ConvexPolyhedron3> {
    if ngon < 3 {
        return Err(Error::InvalidParameter("prism needs ngon >= 3".into()));
    }
    check_positive("height", height)?;
    let mut v = Vec::with_capacity(2 * ngon);
    for z in [-0.5 * height, 0.5 * height] {
        for i in 0..ngon {
            let t = 2.0 * PI * i as f64 / ngon as f64;
            v.push(Point3::new(t.cos(), t.sin(), z));
        }
    }
    let mut faces = vec![
        (0..ngon).rev().collect::<Vec<_>>(),
        (ngon..2 * ngon).collect(),
    ];
    for i in 0..ngon {
        let j = (i + 1) % ngon;
        faces.push(vec![i, j, ngon + j, ngon + i]);
    }
    polyhedron_new(v, faces)
}

/// Elongated body of box `2r × 2r × (d + 4r)`: a faceted cylinder of radius
/// `r` and length `d` along z, closed by conical caps of height `2r`.
///
/// The side count is the multiple of four nearest `facets / 3` (at least 12),
/// so the total face count is close to `facets`.
pub fn generator_truncated_cylinder(r: f64, d: f64, facets: usize) -> Result<ConvexPolyhedron3> {
    check_positive("r", r)?;
    check_positive("d", d)?;
    if facets < 32 {
        return Err(Error::InvalidParameter("facets must be at least 32".into()));
    }
    let n = (4 * ((facets as f64 / 12.0).round() as usize)).max(12);
    let mut v = Vec::with_capacity(2 * n + 2);
    for z in [-0.5 * d, 0.5 * d] {
        for i in 0..n {
            let t = 2.0 * PI * i as f64 / n as f64;
            v.push(Point3::new(r * t.cos(), r * t.sin(), z));
        }
    }
    let (bottom, top) = (2 * n, 2 * n + 1);
    v.push(Point3::new(0.0, 0.0, -0.5 * d - 2.0 * r));
    v.push(Point3::new(0.0, 0.0, 0.5 * d + 2.0 * r));
    let mut faces = Vec::with_capacity(3 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + j, n + i]);
        faces.push(vec![j, i, bottom]);
        faces.push(vec![n + i, n + j, top]);
    }
    polyhedron_new(v, faces)
}

/// Hull of `facets / 2 + 2` Fibonacci points on the ellipsoid with
/// semi-axes `a, b, c` along x, y, z. For mass properties and boxes only.
pub fn generator_ellipsoid_mesh(
    a: f64,
    b: f64,
    c: f64,
    facets: usize,
) -> Result<ConvexPolyhedron3> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    check_positive("c", c)?;
    if facets < 32 {
        return Err(Error::InvalidParameter("facets must be at least 32".into()));
    }
    let pts: Vec<Point3> = fibonacci_sphere(facets / 2 + 2)
        .into_iter()
        .map(|u| Point3::new(a * u.x, b * u.y, c * u.z))
        .collect();
    hull3(&pts)
}
