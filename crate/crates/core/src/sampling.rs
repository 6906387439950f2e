//! Deterministic random streams for Monte Carlo estimators.
//!
//! Every sample index gets its own ChaCha stream derived from
//! `(seed, domain, index)`, so samples can be evaluated in any order or in
//! parallel and still reduce to bitwise-identical results.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geom3d::Point3;

/// Stream domain for line-truncation sweeps.
pub const DOMAIN_SWEEP: u64 = 1;
/// Stream domain for successive-truncation (average robustness) trials.
pub const DOMAIN_AVERAGE: u64 = 2;
/// Stream domain for random rotations of search grids.
pub const DOMAIN_GRID: u64 = 3;

/// Per-sample generator: independent of evaluation order.
pub fn sample_rng(seed: u64, domain: u64, index: u64) -> ChaCha8Rng {
    let key = seed ^ domain.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    rng.set_stream(index);
    rng
}

/// `n` nearly uniform unit vectors on the sphere (golden-angle spiral).
pub fn fibonacci_sphere(n: usize) -> Vec<Point3> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * i as f64;
            Point3::new(r * phi.cos(), r * phi.sin(), z)
        })
        .collect()
}
