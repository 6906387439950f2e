use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::point::{Mat3, Plane, Point3};
use crate::error::{Error, Result};
use crate::tolerance::{eps_geom, DEGENERATE_AREA_REL};

/// Undirected edge with its two incident faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// `faces[0]` traverses `a -> b`, `faces[1]` traverses `b -> a`.
    pub faces: [usize; 2],
}

/// Convex polyhedron with outward, counterclockwise face cycles.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolyhedron3 {
    vertices: Vec<Point3>,
    faces: Vec<Vec<usize>>,
    planes: Vec<Plane>,
    edges: Vec<Edge>,
    neighbors: Vec<Vec<usize>>,
    diameter: f64,
}

fn newell_normal(vertices: &[Point3], face: &[usize]) -> Point3 {
    let mut n = Point3::ORIGIN;
    let k = face.len();
    for i in 0..k {
        let a = vertices[face[i]];
        let b = vertices[face[(i + 1) % k]];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    n
}

fn bbox_diagonal(points: &[Point3]) -> f64 {
    let mut lo = Point3::new(f64::INFINITY, f64::INFINITY, f64::INFINITY);
    let mut hi = -lo;
    for p in points {
        lo = Point3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
        hi = Point3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
    }
    (hi - lo).norm()
}

/// Validates a vertex/face description of a convex polyhedron.
///
/// Faces given clockwise (seen from outside) are reversed. Fails on
/// non-planar or non-convex faces, vertices outside a face plane, open or
/// non-manifold surfaces, coplanar neighbouring faces and zero volume.
pub fn polyhedron_new(
    vertices: Vec<Point3>,
    mut faces: Vec<Vec<usize>>,
) -> Result<ConvexPolyhedron3> {
    if vertices.len() < 4 || faces.len() < 4 {
        return Err(Error::DegenerateInput(
            "need at least 4 vertices and 4 faces".into(),
        ));
    }
    if vertices.iter().any(|v| !v.is_finite()) {
        return Err(Error::DegenerateInput("non-finite coordinate".into()));
    }
    let scale = bbox_diagonal(&vertices);
    if scale == 0.0 {
        return Err(Error::DegenerateInput("all vertices coincide".into()));
    }
    let tol = eps_geom() * scale;
    let mut used = vec![false; vertices.len()];
    let mut planes = Vec::with_capacity(faces.len());
    for (fi, face) in faces.iter_mut().enumerate() {
        if face.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "face {fi} has fewer than 3 vertices"
            )));
        }
        if face.iter().any(|&v| v >= vertices.len()) {
            return Err(Error::DegenerateInput(format!(
                "face {fi} references a missing vertex"
            )));
        }
        let mut sorted = face.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != face.len() {
            return Err(Error::DegenerateInput(format!(
                "face {fi} repeats a vertex"
            )));
        }
        for &v in face.iter() {
            used[v] = true;
        }
        let n = newell_normal(&vertices, face);
        if n.norm() <= tol * tol {
            return Err(Error::DegenerateInput(format!("face {fi} has zero area")));
        }
        let n = n.normalized();
        let offset = face.iter().map(|&v| n.dot(vertices[v])).sum::<f64>() / face.len() as f64;
        let mut plane = Plane { normal: n, offset };
        if face
            .iter()
            .any(|&v| plane.signed_distance(vertices[v]).abs() > 10.0 * tol)
        {
            return Err(Error::NonConvexInput(format!("face {fi} is not planar")));
        }
        let above = vertices
            .iter()
            .map(|v| plane.signed_distance(*v))
            .fold(f64::NEG_INFINITY, f64::max);
        if above > tol {
            let below = vertices
                .iter()
                .map(|v| plane.signed_distance(*v))
                .fold(f64::INFINITY, f64::min);
            if below < -tol {
                return Err(Error::NonConvexInput(format!(
                    "vertices on both sides of face {fi}"
                )));
            }
            face.reverse();
            plane = plane.flipped();
        }
        let k = face.len();
        for i in 0..k {
            let a = vertices[face[i]];
            let b = vertices[face[(i + 1) % k]];
            let c = vertices[face[(i + 2) % k]];
            let (e1, e2) = (b - a, c - b);
            let sin = e1.cross(e2).dot(plane.normal) / (e1.norm() * e2.norm());
            if !(sin > eps_geom()) {
                return Err(Error::NonConvexInput(format!(
                    "face {fi} is not strictly convex"
                )));
            }
        }
        planes.push(plane);
    }
    if used.iter().any(|u| !u) {
        return Err(Error::DegenerateInput("unreferenced vertex".into()));
    }
    let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
    for (fi, face) in faces.iter().enumerate() {
        let k = face.len();
        for i in 0..k {
            if directed.insert((face[i], face[(i + 1) % k]), fi).is_some() {
                return Err(Error::NonConvexInput("surface is not a 2-manifold".into()));
            }
        }
    }
    let mut edges = Vec::with_capacity(directed.len() / 2);
    let mut neighbors = vec![Vec::new(); vertices.len()];
    for (fi, face) in faces.iter().enumerate() {
        let k = face.len();
        for i in 0..k {
            let (a, b) = (face[i], face[(i + 1) % k]);
            let Some(&twin) = directed.get(&(b, a)) else {
                return Err(Error::NonConvexInput("surface is not closed".into()));
            };
            if a < b {
                edges.push(Edge {
                    a,
                    b,
                    faces: [fi, twin],
                });
                neighbors[a].push(b);
                neighbors[b].push(a);
            }
        }
    }
    for e in &edges {
        let (p1, p2) = (planes[e.faces[0]], planes[e.faces[1]]);
        let flat = faces[e.faces[1]]
            .iter()
            .all(|&v| p1.signed_distance(vertices[v]).abs() <= tol);
        if p1.normal.cross(p2.normal).norm() <= 1e-7 && p1.normal.dot(p2.normal) > 0.0 && flat {
            return Err(Error::NonConvexInput(format!(
                "faces {} and {} are coplanar",
                e.faces[0], e.faces[1]
            )));
        }
    }
    if vertices.len() as i64 - edges.len() as i64 + faces.len() as i64 != 2 {
        return Err(Error::NonConvexInput(
            "Euler characteristic is not 2".into(),
        ));
    }
    let mut diameter: f64 = 0.0;
    for (i, a) in vertices.iter().enumerate() {
        for b in &vertices[i + 1..] {
            diameter = diameter.max(a.dist(*b));
        }
    }
    let poly = ConvexPolyhedron3 {
        vertices,
        faces,
        planes,
        edges,
        neighbors,
        diameter,
    };
    if poly.volume() <= DEGENERATE_AREA_REL * diameter.powi(3) {
        return Err(Error::DegenerateInput("zero volume".into()));
    }
    Ok(poly)
}

impl ConvexPolyhedron3 {
    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn planes(&self) -> &[Plane] {
        &self.planes
    }

    pub fn plane(&self, face: usize) -> Plane {
        self.planes[face]
    }

    /// Vertices adjacent to `v` along an edge.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn eps(&self) -> f64 {
        eps_geom() * self.diameter
    }

    pub fn face_points(&self, face: usize) -> impl Iterator<Item = Point3> + '_ {
        self.faces[face].iter().map(move |&v| self.vertices[v])
    }

    pub fn face_area(&self, face: usize) -> f64 {
        0.5 * newell_normal(&self.vertices, &self.faces[face]).norm()
    }

    pub fn surface_area(&self) -> f64 {
        (0..self.faces.len()).map(|f| self.face_area(f)).sum()
    }

    /// Divergence-theorem accumulation over face fans.
    fn volume_and_moment(&self) -> (f64, Point3) {
        let o = self.vertices[0];
        let mut vol = 0.0;
        let mut moment = Point3::ORIGIN;
        for face in &self.faces {
            let a = self.vertices[face[0]] - o;
            for w in face[1..].windows(2) {
                let b = self.vertices[w[0]] - o;
                let c = self.vertices[w[1]] - o;
                let v = a.dot(b.cross(c)) / 6.0;
                vol += v;
                moment += (a + b + c) * (v / 4.0);
            }
        }
        (vol, moment)
    }

    pub fn volume(&self) -> f64 {
        self.volume_and_moment().0
    }

    /// Centroid of the uniform solid.
    pub fn centroid(&self) -> Point3 {
        let (vol, moment) = self.volume_and_moment();
        self.vertices[0] + moment / vol
    }

    /// `(min, max)` of `n·v` over the vertices.
    pub fn support(&self, n: Point3) -> (f64, f64) {
        self.vertices
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                let h = n.dot(*v);
                (lo.min(h), hi.max(h))
            })
    }

    /// Minimum distance from `p` to the face planes, positive inside.
    pub fn inset_distance(&self, p: Point3) -> f64 {
        self.planes
            .iter()
            .map(|pl| -pl.signed_distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains_strictly(&self, p: Point3) -> bool {
        self.inset_distance(p) > self.eps()
    }

    pub fn map_vertices(&self, f: impl Fn(Point3) -> Point3) -> Result<ConvexPolyhedron3> {
        polyhedron_new(
            self.vertices.iter().map(|v| f(*v)).collect(),
            self.faces.clone(),
        )
    }

    pub fn scaled(&self, s: f64) -> Result<ConvexPolyhedron3> {
        self.map_vertices(|v| v * s)
    }

    pub fn rotated(&self, m: &Mat3) -> Result<ConvexPolyhedron3> {
        self.map_vertices(|v| m.apply(v))
    }

    pub fn translated(&self, t: Point3) -> Result<ConvexPolyhedron3> {
        self.map_vertices(|v| v + t)
    }

    /// Inradius and incenter of a face; for regular faces both are exact,
    /// otherwise the largest circle centred at the face centroid is used.
    pub fn face_incircle(&self, face: usize) -> (Point3, f64) {
        let pts: Vec<Point3> = self.face_points(face).collect();
        let n = self.planes[face].normal;
        let center = pts.iter().fold(Point3::ORIGIN, |acc, p| acc + *p) / pts.len() as f64;
        let k = pts.len();
        let r = (0..k)
            .map(|i| {
                let a = pts[i];
                let e = (pts[(i + 1) % k] - a).normalized();
                let inward = n.cross(e);
                (center - a).dot(inward)
            })
            .fold(f64::INFINITY, f64::min);
        (center, r)
    }
}
