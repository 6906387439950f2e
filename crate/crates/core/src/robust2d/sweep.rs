use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::equilib2d::centroid_stable_count;
use crate::error::{Error, Result};
use crate::geom2d::{clip_halfplane, ConvexPolygon2, Line2, Point2, Side};
use crate::sampling::{sample_rng, DOMAIN_SWEEP};

/// One retained piece of one random cutting line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncationSample {
    pub theta: f64,
    pub offset: f64,
    pub side: Side,
    pub relative_area: f64,
    /// Stable count about the piece's centroid; `None` for degenerate pieces.
    pub piece_s: Option<usize>,
    pub delta_s: Option<i64>,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SweepBin {
    pub lo: f64,
    pub hi: f64,
    pub total: usize,
    pub by_delta: BTreeMap<i64, usize>,
    pub degenerate: usize,
}

impl SweepBin {
    pub fn fraction(&self, delta: i64) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        *self.by_delta.get(&delta).unwrap_or(&0) as f64 / self.total as f64
    }

    pub fn degenerate_fraction(&self) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.degenerate as f64 / self.total as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub stable_count: usize,
    pub samples: Vec<TruncationSample>,
    pub bins: Vec<SweepBin>,
}

impl Sweep {
    pub fn observed_deltas(&self) -> Vec<i64> {
        let mut all: Vec<i64> = self.samples.iter().filter_map(|s| s.delta_s).collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn degenerate_count(&self) -> usize {
        self.samples.iter().filter(|s| s.degenerate).count()
    }

    /// Fraction of all records with the given stable-count change.
    pub fn fraction(&self, delta: i64) -> f64 {
        self.samples
            .iter()
            .filter(|s| s.delta_s == Some(delta))
            .count() as f64
            / self.samples.len() as f64
    }
}

/// Draws a line meeting `poly` from the motion-invariant measure: direction
/// uniform in `[0, π)`, offset uniform over the support width.
pub fn sample_line(poly: &ConvexPolygon2, rng: &mut impl Rng) -> (f64, f64) {
    let theta = rng.gen::<f64>() * PI;
    let (lo, hi) = poly.support(Point2::from_angle(theta));
    let offset = lo + (hi - lo) * rng.gen::<f64>();
    (theta, offset)
}

/// Random single-line truncations, recording both pieces of every line.
///
/// Deterministic for fixed `(seed, samples)` regardless of thread count.
pub fn truncation_sweep(
    poly: &ConvexPolygon2,
    samples: usize,
    seed: u64,
    bins: usize,
) -> Result<Sweep> {
    if samples == 0 || bins == 0 {
        return Err(Error::InvalidParameter(
            "samples and bins must be positive".into(),
        ));
    }
    let base = centroid_stable_count(poly).ok_or_else(|| {
        Error::DegenerateConfiguration("degenerate equilibria about the centroid".into())
    })?;
    let area = poly.area();
    let records: Vec<[TruncationSample; 2]> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(seed, DOMAIN_SWEEP, i);
            let (theta, offset) = sample_line(poly, &mut rng);
            let line = Line2::from_normal_offset(theta, offset);
            let neg = clip_halfplane(poly, &line, Side::Negative);
            let pos = clip_halfplane(poly, &line, Side::Positive);
            let sliver = neg.is_none() || pos.is_none();
            let record = |piece: &Option<ConvexPolygon2>, side: Side| {
                let relative_area = piece.as_ref().map_or(0.0, |p| p.area() / area);
                let piece_s = if sliver {
                    None
                } else {
                    piece.as_ref().and_then(centroid_stable_count)
                };
                TruncationSample {
                    theta,
                    offset,
                    side,
                    relative_area,
                    piece_s,
                    delta_s: piece_s.map(|s| s as i64 - base as i64),
                    degenerate: piece_s.is_none(),
                }
            };
            [record(&neg, Side::Negative), record(&pos, Side::Positive)]
        })
        .collect();
    let samples: Vec<TruncationSample> = records.into_iter().flatten().collect();
    let mut table: Vec<SweepBin> = (0..bins)
        .map(|k| SweepBin {
            lo: k as f64 / bins as f64,
            hi: (k + 1) as f64 / bins as f64,
            ..Default::default()
        })
        .collect();
    for s in &samples {
        let k = ((s.relative_area * bins as f64) as usize).min(bins - 1);
        let bin = &mut table[k];
        bin.total += 1;
        match s.delta_s {
            Some(d) => *bin.by_delta.entry(d).or_insert(0) += 1,
            None => bin.degenerate += 1,
        }
    }
    Ok(Sweep {
        stable_count: base,
        samples,
        bins: table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom2d::polygon_new;

    fn unit_square() -> ConvexPolygon2 {
        polygon_new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn single_sample_two_records() {
        let sw = truncation_sweep(&unit_square(), 1, 1, 10).unwrap();
        assert_eq!(sw.samples.len(), 2);
        let total: f64 = sw.samples.iter().map(|s| s.relative_area).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn deterministic() {
        let a = truncation_sweep(&unit_square(), 500, 9, 10).unwrap();
        let b = truncation_sweep(&unit_square(), 500, 9, 10).unwrap();
        assert_eq!(a, b);
        let c = truncation_sweep(&unit_square(), 500, 10, 10).unwrap();
        assert_ne!(a.samples, c.samples);
    }

    #[test]
    fn bins_conserve_counts() {
        let sw = truncation_sweep(&unit_square(), 2000, 3, 20).unwrap();
        let total: usize = sw.bins.iter().map(|b| b.total).sum();
        assert_eq!(total, 4000);
        for b in &sw.bins {
            let parts: usize = b.by_delta.values().sum::<usize>() + b.degenerate;
            assert_eq!(parts, b.total);
        }
    }
}
