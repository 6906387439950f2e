use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sweep::sample_line;
use crate::equilib2d::centroid_stable_count;
use crate::error::{Error, Result};
use crate::geom2d::{clip_halfplane, ConvexPolygon2, Line2, Side};
use crate::sampling::{sample_rng, DOMAIN_AVERAGE};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AverageRobustness {
    pub order: usize,
    pub trials: usize,
    pub neutral: usize,
    /// Fraction of trials whose final piece kept the original stable count.
    pub value: f64,
    /// Binomial standard error of `value`.
    pub std_error: f64,
}

/// Monte Carlo estimate of the n-th order average robustness.
///
/// Each trial applies `order` successive cuts. Every cut is a line drawn from
/// the invariant measure restricted to lines meeting the current piece, and a
/// fair coin picks which piece to keep. A trial is neutral when the final
/// piece has the same stable count (about its centroid) as `poly`; degenerate
/// pieces count as non-neutral.
pub fn average_robustness(
    poly: &ConvexPolygon2,
    order: usize,
    samples: usize,
    seed: u64,
) -> Result<AverageRobustness> {
    if order == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter(
            "at least one trial is required".into(),
        ));
    }
    let class = centroid_stable_count(poly).ok_or_else(|| {
        Error::DegenerateConfiguration("degenerate equilibria about the centroid".into())
    })?;
    let neutral = (0..samples as u64)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = sample_rng(seed, DOMAIN_AVERAGE, i);
            let mut piece = poly.clone();
            for _ in 0..order {
                let (theta, offset) = sample_line(&piece, &mut rng);
                let side = if rng.gen::<bool>() {
                    Side::Positive
                } else {
                    Side::Negative
                };
                match clip_halfplane(&piece, &Line2::from_normal_offset(theta, offset), side) {
                    Some(next) => piece = next,
                    None => return false,
                }
            }
            centroid_stable_count(&piece) == Some(class)
        })
        .count();
    let value = neutral as f64 / samples as f64;
    Ok(AverageRobustness {
        order,
        trials: samples,
        neutral,
        value,
        std_error: (value * (1.0 - value) / samples as f64).sqrt(),
    })
}
