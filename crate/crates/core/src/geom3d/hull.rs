use std::collections::{HashMap, VecDeque};

use super::point::Point3;
use super::polyhedron::{polyhedron_new, ConvexPolyhedron3};
use crate::error::{Error, Result};
use crate::tolerance::eps_geom;

/// Merge threshold on the angle between neighbouring facet normals.
pub const MERGE_ANGLE: f64 = 1e-7;

#[derive(Clone, Copy)]
struct Tri {
    v: [usize; 3],
    n: Point3,
    d: f64,
}

impl Tri {
    fn new(pts: &[Point3], v: [usize; 3]) -> Self {
        let n = (pts[v[1]] - pts[v[0]])
            .cross(pts[v[2]] - pts[v[0]])
            .normalized();
        let d = n.dot(pts[v[0]]);
        Tri { v, n, d }
    }

    fn dist(&self, p: Point3) -> f64 {
        self.n.dot(p) - self.d
    }
}

fn initial_simplex(pts: &[Point3], tol: f64) -> Result<[usize; 4]> {
    let err = || Error::DegenerateInput("points are coplanar".into());
    let i0 = (0..pts.len())
        .min_by(|&a, &b| pts[a].x.total_cmp(&pts[b].x))
        .unwrap();
    let i1 = (0..pts.len())
        .max_by(|&a, &b| pts[a].dist(pts[i0]).total_cmp(&pts[b].dist(pts[i0])))
        .unwrap();
    let axis = (pts[i1] - pts[i0]).normalized();
    if pts[i1].dist(pts[i0]) <= tol {
        return Err(err());
    }
    let off_line = |p: Point3| {
        let r = p - pts[i0];
        (r - axis * r.dot(axis)).norm()
    };
    let i2 = (0..pts.len())
        .max_by(|&a, &b| off_line(pts[a]).total_cmp(&off_line(pts[b])))
        .unwrap();
    if off_line(pts[i2]) <= tol {
        return Err(err());
    }
    let n = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
    let i3 = (0..pts.len())
        .max_by(|&a, &b| {
            n.dot(pts[a] - pts[i0])
                .abs()
                .total_cmp(&n.dot(pts[b] - pts[i0]).abs())
        })
        .unwrap();
    if n.dot(pts[i3] - pts[i0]).abs() <= tol {
        return Err(err());
    }
    Ok([i0, i1, i2, i3])
}

/// Convex hull of a point cloud with coplanar facets merged into single faces.
pub fn hull3(points: &[Point3]) -> Result<ConvexPolyhedron3> {
    if points.len() < 4 {
        return Err(Error::DegenerateInput("need at least 4 points".into()));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::DegenerateInput("non-finite coordinate".into()));
    }
    let mut lo = points[0];
    let mut hi = points[0];
    for p in points {
        lo = Point3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
        hi = Point3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
    }
    let tol = eps_geom() * (hi - lo).norm();
    let s = initial_simplex(points, tol)?;
    let inner = (points[s[0]] + points[s[1]] + points[s[2]] + points[s[3]]) / 4.0;

    let mut tris: Vec<Option<Tri>> = Vec::new();
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    let add = |tris: &mut Vec<Option<Tri>>,
               owner: &mut HashMap<(usize, usize), usize>,
               mut v: [usize; 3]| {
        let mut t = Tri::new(points, v);
        if t.dist(inner) > 0.0 {
            v.swap(1, 2);
            t = Tri::new(points, v);
        }
        let id = tris.len();
        for k in 0..3 {
            owner.insert((v[k], v[(k + 1) % 3]), id);
        }
        tris.push(Some(t));
    };
    for skip in 0..4 {
        let v: Vec<usize> = (0..4).filter(|&k| k != skip).map(|k| s[k]).collect();
        add(&mut tris, &mut owner, [v[0], v[1], v[2]]);
    }

    for (pi, &p) in points.iter().enumerate() {
        if s.contains(&pi) {
            continue;
        }
        let Some(seed) = (0..tris.len())
            .filter_map(|i| tris[i].map(|t| (i, t.dist(p))))
            .filter(|&(_, d)| d > tol)
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(i, _)| i)
        else {
            continue;
        };
        let mut visible = vec![false; tris.len()];
        visible[seed] = true;
        let mut queue = VecDeque::from([seed]);
        let mut order = Vec::new();
        while let Some(f) = queue.pop_front() {
            order.push(f);
            let t = tris[f].unwrap();
            for k in 0..3 {
                let twin = owner[&(t.v[(k + 1) % 3], t.v[k])];
                if !visible[twin] && tris[twin].unwrap().dist(p) > tol {
                    visible[twin] = true;
                    queue.push_back(twin);
                }
            }
        }
        let mut horizon = Vec::new();
        for &f in &order {
            let t = tris[f].unwrap();
            for k in 0..3 {
                let (a, b) = (t.v[k], t.v[(k + 1) % 3]);
                if !visible[owner[&(b, a)]] {
                    horizon.push((a, b));
                }
            }
        }
        for &f in &order {
            let t = tris[f].take().unwrap();
            for k in 0..3 {
                let key = (t.v[k], t.v[(k + 1) % 3]);
                if owner.get(&key) == Some(&f) {
                    owner.remove(&key);
                }
            }
        }
        for (a, b) in horizon {
            let v = [a, b, pi];
            let t = Tri::new(points, v);
            let id = tris.len();
            for k in 0..3 {
                owner.insert((v[k], v[(k + 1) % 3]), id);
            }
            tris.push(Some(t));
        }
    }

    merge_facets(points, &tris, &owner, tol)
}

fn merge_facets(
    points: &[Point3],
    tris: &[Option<Tri>],
    owner: &HashMap<(usize, usize), usize>,
    tol: f64,
) -> Result<ConvexPolyhedron3> {
    let mut group = vec![usize::MAX; tris.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for start in 0..tris.len() {
        let Some(seed) = tris[start] else { continue };
        if group[start] != usize::MAX {
            continue;
        }
        let g = groups.len();
        group[start] = g;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let t = tris[members[i]].unwrap();
            i += 1;
            for k in 0..3 {
                let nb = owner[&(t.v[(k + 1) % 3], t.v[k])];
                if group[nb] != usize::MAX {
                    continue;
                }
                let u = tris[nb].unwrap();
                let angle = seed.n.cross(u.n).norm().asin();
                let flat = u.v.iter().all(|&w| seed.dist(points[w]).abs() <= tol);
                if seed.n.dot(u.n) > 0.0 && angle <= MERGE_ANGLE && flat {
                    group[nb] = g;
                    members.push(nb);
                }
            }
        }
        groups.push(members);
    }

    let mut faces = Vec::with_capacity(groups.len());
    for members in &groups {
        let g = group[members[0]];
        let mut next: HashMap<usize, usize> = HashMap::new();
        for &m in members {
            let t = tris[m].unwrap();
            for k in 0..3 {
                let (a, b) = (t.v[k], t.v[(k + 1) % 3]);
                if group[owner[&(b, a)]] != g && next.insert(a, b).is_some() {
                    return Err(Error::NonConvexInput(
                        "facet group boundary is not a simple cycle".into(),
                    ));
                }
            }
        }
        let start = *next.keys().min().unwrap();
        let mut cycle = vec![start];
        let mut cur = next[&start];
        while cur != start {
            cycle.push(cur);
            if cycle.len() > next.len() {
                return Err(Error::NonConvexInput(
                    "facet group boundary is not a simple cycle".into(),
                ));
            }
            cur = next[&cur];
        }
        if cycle.len() != next.len() {
            return Err(Error::NonConvexInput("facet group has holes".into()));
        }
        faces.push(cycle);
    }

    // A true vertex lies on at least three faces; the rest sit inside edges.
    let mut incidence = vec![0usize; points.len()];
    for f in &faces {
        for &v in f {
            incidence[v] += 1;
        }
    }
    let mut remap = vec![usize::MAX; points.len()];
    let mut vertices = Vec::new();
    for (i, &c) in incidence.iter().enumerate() {
        if c >= 3 {
            remap[i] = vertices.len();
            vertices.push(points[i]);
        }
    }
    let faces = faces
        .into_iter()
        .map(|f| {
            f.into_iter()
                .filter(|&v| remap[v] != usize::MAX)
                .map(|v| remap[v])
                .collect()
        })
        .collect();
    polyhedron_new(vertices, faces)
}
