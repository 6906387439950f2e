use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{centroid_counts, classify3, RobustnessKind3, RobustnessReport3, Witness3};
use crate::error::{Error, Result};
use crate::geom2d::Side;
use crate::geom3d::{clip_halfspace3, ConvexPolyhedron3, Mat3, Plane, Point3};
use crate::robust2d::Method;
use crate::sampling::{fibonacci_sphere, sample_rng, DOMAIN_GRID};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionTarget {
    ReduceS,
    ReduceU,
    ReduceAny,
}

/// Candidate planes: `normals` Fibonacci-sphere directions, each with
/// `offsets` equally spaced interior offsets of the support interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneGrid {
    pub normals: usize,
    pub offsets: usize,
}

impl Default for PlaneGrid {
    fn default() -> Self {
        PlaneGrid {
            normals: 256,
            offsets: 32,
        }
    }
}

/// Uniform random rotation from a unit quaternion; identity for seed 0.
fn grid_rotation(seed: u64) -> Mat3 {
    if seed == 0 {
        return Mat3::IDENTITY;
    }
    let mut rng = sample_rng(seed, DOMAIN_GRID, 0);
    let (u1, u2, u3): (f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen());
    let tau = 2.0 * std::f64::consts::PI;
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    let (w, x, y, z) = (
        a * (tau * u2).sin(),
        a * (tau * u2).cos(),
        b * (tau * u3).sin(),
        b * (tau * u3).cos(),
    );
    Mat3([
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - z * w),
            2.0 * (x * z + y * w),
        ],
        [
            2.0 * (x * y + z * w),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - x * w),
        ],
        [
            2.0 * (x * z - y * w),
            2.0 * (y * z + x * w),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ])
}

#[derive(Debug, Clone, Copy)]
struct Hit {
    removed: f64,
    normal: Point3,
    offset: f64,
    side: Side,
}

/// Piece kept on `side` of `{x : n·x = c}`.
fn piece(poly: &ConvexPolyhedron3, n: Point3, c: f64, side: Side) -> Option<ConvexPolyhedron3> {
    let plane = match side {
        Side::Negative => Plane {
            normal: n,
            offset: c,
        },
        Side::Positive => Plane {
            normal: -n,
            offset: -c,
        },
    };
    clip_halfspace3(poly, &plane)
}

struct Searcher<'a> {
    poly: &'a ConvexPolyhedron3,
    volume: f64,
    base: (usize, usize),
    target: ReductionTarget,
    offsets: usize,
    refine: f64,
}

impl Searcher<'_> {
    /// Removed relative volume if the piece is a nondegenerate reduction.
    fn reduction(&self, n: Point3, c: f64, side: Side) -> Option<f64> {
        let kept = piece(self.poly, n, c, side)?;
        let (s, _, u) = centroid_counts(&kept)?;
        let hit = match self.target {
            ReductionTarget::ReduceS => s < self.base.0,
            ReductionTarget::ReduceU => u < self.base.1,
            ReductionTarget::ReduceAny => s < self.base.0 || u < self.base.1,
        };
        hit.then(|| 1.0 - kept.volume() / self.volume)
    }

    /// Walks offsets from the removal-free end and refines the first
    /// reducing bracket by bisection.
    fn along(&self, n: Point3, side: Side) -> Option<Hit> {
        let (lo, hi) = self.poly.support(n);
        let width = hi - lo;
        let at = |k: usize| {
            let f = k as f64 / (self.offsets + 1) as f64;
            match side {
                Side::Negative => hi - width * f,
                Side::Positive => lo + width * f,
            }
        };
        let mut free = at(0);
        for k in 1..=self.offsets {
            let c = at(k);
            if let Some(mut removed) = self.reduction(n, c, side) {
                let mut red = c;
                while (red - free).abs() > self.refine {
                    let mid = 0.5 * (red + free);
                    match self.reduction(n, mid, side) {
                        Some(r) => {
                            red = mid;
                            removed = r;
                        }
                        None => free = mid,
                    }
                }
                return Some(Hit {
                    removed,
                    normal: n,
                    offset: red,
                    side,
                });
            }
            free = c;
        }
        None
    }

    fn run(&self, normals: &[Point3]) -> Option<Hit> {
        let hits: Vec<Option<Hit>> = normals
            .par_iter()
            .map(|&n| {
                let a = self.along(n, Side::Negative);
                let b = self.along(n, Side::Positive);
                match (a, b) {
                    (Some(x), Some(y)) => Some(if y.removed < x.removed { y } else { x }),
                    (x, y) => x.or(y),
                }
            })
            .collect();
        hits.into_iter()
            .flatten()
            .fold(None, |best: Option<Hit>, h| match best {
                Some(b) if b.removed <= h.removed => Some(b),
                _ => Some(h),
            })
    }
}

/// Upper bound on the partial robustness of a polyhedron from single-plane
/// truncations.
///
/// Both pieces of every candidate plane are classified about their own
/// centroids. The grid of normals is rotated by a random rotation drawn
/// from `seed` (seed 0 keeps the canonical grid). `refine_tol` is relative
/// to the diameter. For [`ReductionTarget::ReduceAny`] the result is the
/// smaller of the stable and unstable bounds.
pub fn plane_truncation_search(
    poly: &ConvexPolyhedron3,
    target: ReductionTarget,
    grid: PlaneGrid,
    refine_tol: f64,
    seed: u64,
) -> Result<RobustnessReport3> {
    if grid.normals < 4 || grid.offsets < 1 {
        return Err(Error::InvalidParameter(
            "grid needs at least 4 normals and 1 offset".into(),
        ));
    }
    if !(refine_tol > 0.0) {
        return Err(Error::InvalidParameter(
            "refine_tol must be positive".into(),
        ));
    }
    let set = classify3(poly, poly.centroid())?;
    if set.is_degenerate() {
        return Err(Error::DegenerateConfiguration(
            "degenerate equilibrium about the centroid".into(),
        ));
    }
    let (s, h, u) = set.counts();
    let rot = grid_rotation(seed);
    let normals: Vec<Point3> = fibonacci_sphere(grid.normals)
        .into_iter()
        .map(|n| rot.apply(n))
        .collect();
    let search = |t: ReductionTarget| {
        Searcher {
            poly,
            volume: poly.volume(),
            base: (s, u),
            target: t,
            offsets: grid.offsets,
            refine: refine_tol * poly.diameter(),
        }
        .run(&normals)
    };
    let mut notes = vec![format!(
        "grid: {} normals x {} offsets, both pieces, seed {seed}, refine_tol {refine_tol:e}",
        grid.normals, grid.offsets
    )];
    let (kind, hit) = match target {
        ReductionTarget::ReduceS => (RobustnessKind3::PartialStable, search(target)),
        ReductionTarget::ReduceU => (RobustnessKind3::PartialUnstable, search(target)),
        ReductionTarget::ReduceAny => {
            let hs = search(ReductionTarget::ReduceS);
            let hu = search(ReductionTarget::ReduceU);
            let show =
                |h: &Option<Hit>| h.map_or("none".to_string(), |h| format!("{:?}", h.removed));
            notes.push(format!(
                "stable bound {}, unstable bound {}",
                show(&hs),
                show(&hu)
            ));
            let hit = match (hs, hu) {
                (Some(a), Some(b)) => Some(if b.removed < a.removed { b } else { a }),
                (a, b) => a.or(b),
            };
            (RobustnessKind3::Partial, hit)
        }
    };
    let hit = hit.ok_or(Error::NoReductionFound)?;
    Ok(RobustnessReport3 {
        kind,
        value: hit.removed,
        witness: Witness3::Plane {
            normal: hit.normal,
            offset: hit.offset,
            side: hit.side,
        },
        method: Method::Search,
        upper_bound: true,
        counts: [s, h, u],
        notes,
    })
}
