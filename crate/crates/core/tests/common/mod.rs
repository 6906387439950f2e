//! Test-side reference computations. These deliberately avoid the library's
//! geometry kernel: polygons are plain `[x, y]` arrays and every quantity is
//! recomputed from first principles.

#![allow(dead_code)]

use std::f64::consts::PI;

pub type P2 = [f64; 2];

pub fn area(poly: &[P2]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum::<f64>()
        / 2.0
}

pub fn centroid(poly: &[P2]) -> P2 {
    let n = poly.len();
    let (mut cx, mut cy, mut a2) = (0.0, 0.0, 0.0);
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        let w = a[0] * b[1] - a[1] * b[0];
        cx += (a[0] + b[0]) * w;
        cy += (a[1] + b[1]) * w;
        a2 += w;
    }
    [cx / (3.0 * a2), cy / (3.0 * a2)]
}

/// Sutherland-Hodgman against `n·z <= c` (`below`) or `n·z >= c`.
pub fn clip(poly: &[P2], n: P2, c: f64, below: bool) -> Vec<P2> {
    let s = if below { 1.0 } else { -1.0 };
    let f = |p: P2| s * (n[0] * p[0] + n[1] * p[1] - c);
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        let (fa, fb) = (f(a), f(b));
        if fa <= 0.0 {
            out.push(a);
        }
        if (fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0) {
            let t = fa / (fa - fb);
            out.push([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]);
        }
    }
    out
}

/// Edges whose foot from `q` lies strictly inside; `None` if some foot is
/// within `tol` (relative to the edge) of an endpoint.
pub fn stable_count(poly: &[P2], q: P2, tol: f64) -> Option<usize> {
    let n = poly.len();
    let mut count = 0;
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        let d = [b[0] - a[0], b[1] - a[1]];
        let len2 = d[0] * d[0] + d[1] * d[1];
        let t = ((q[0] - a[0]) * d[0] + (q[1] - a[1]) * d[1]) / len2;
        if t.abs() <= tol || (t - 1.0).abs() <= tol {
            return None;
        }
        if t > 0.0 && t < 1.0 {
            count += 1;
        }
    }
    Some(count)
}

pub fn centroid_stable(poly: &[P2]) -> Option<usize> {
    if poly.len() < 3 {
        return None;
    }
    stable_count(poly, centroid(poly), 1e-9)
}

/// Counts local minima and maxima of the distance to `q` along the boundary,
/// sampled at `per_edge` points per edge (vertices included).
pub fn dense_extrema(poly: &[P2], q: P2, per_edge: usize) -> (usize, usize) {
    let n = poly.len();
    let mut f = Vec::with_capacity(n * per_edge);
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        for k in 0..per_edge {
            let t = k as f64 / per_edge as f64;
            let z = [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
            f.push(((z[0] - q[0]).powi(2) + (z[1] - q[1]).powi(2)).sqrt());
        }
    }
    let m = f.len();
    let (mut minima, mut maxima) = (0, 0);
    for i in 0..m {
        let (l, c, r) = (f[(i + m - 1) % m], f[i], f[(i + 1) % m]);
        if c < l && c <= r {
            minima += 1;
        }
        if c > l && c >= r {
            maxima += 1;
        }
    }
    (minima, maxima)
}

pub fn regular_in_closed(s: usize) -> f64 {
    1.0 / (2.0 * s as f64)
}

pub fn regular_ex_closed(s: usize) -> f64 {
    let s = s as f64;
    let t = (PI / s).tan();
    (t - PI / s) / (s * t)
}

/// Brute-force single-line truncation bound: every grid offset of every grid
/// direction is evaluated; the first reducing offset from the cheap end is
/// bisected against its predecessor down to `tol`.
pub fn line_bound_oracle(poly: &[P2], thetas: usize, offsets: usize, tol: f64) -> f64 {
    let total = area(poly);
    let target = centroid_stable(poly).expect("nondegenerate reference");
    let reduces = |n: P2, c: f64, below: bool| -> Option<f64> {
        let piece = clip(poly, n, c, below);
        if piece.len() < 3 || area(&piece) <= 1e-12 * total {
            return None;
        }
        match centroid_stable(&piece) {
            Some(s) if s < target => Some(1.0 - area(&piece) / total),
            _ => None,
        }
    };
    let mut best = f64::INFINITY;
    for j in 0..thetas {
        let th = PI * j as f64 / thetas as f64;
        let n = [th.cos(), th.sin()];
        let proj: Vec<f64> = poly.iter().map(|v| n[0] * v[0] + n[1] * v[1]).collect();
        let lo = proj.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = proj.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let at = |k: usize| lo + (hi - lo) * k as f64 / offsets as f64;
        for below in [true, false] {
            let order: Vec<usize> = if below {
                (1..offsets).rev().collect()
            } else {
                (1..offsets).collect()
            };
            let mut prev = if below { hi } else { lo };
            for k in order {
                let c = at(k);
                if let Some(mut removed) = reduces(n, c, below) {
                    let (mut good, mut bad) = (c, prev);
                    while (good - bad).abs() > tol {
                        let mid = 0.5 * (good + bad);
                        match reduces(n, mid, below) {
                            Some(r) => {
                                good = mid;
                                removed = r;
                            }
                            None => bad = mid,
                        }
                    }
                    best = best.min(removed);
                    break;
                }
                prev = c;
            }
        }
    }
    best
}

pub fn unit_square() -> Vec<P2> {
    vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
}
