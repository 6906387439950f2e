//! Geometric tolerance policy.
//!
//! A single absolute tolerance `eps_geom` is applied to coordinates scaled to
//! unit diameter. Strict inequalities become "strictly beyond eps" tests and
//! anything within eps of a boundary is reported as degenerate.
//!
//! The default is `1e-9`; the `EQ_EPS` environment variable overrides it once
//! per process.

use std::sync::OnceLock;

pub const DEFAULT_EPS_GEOM: f64 = 1e-9;

/// Relative area below which a polygon is considered degenerate.
pub const DEGENERATE_AREA_REL: f64 = 1e-12;

static EPS: OnceLock<f64> = OnceLock::new();

pub fn eps_geom() -> f64 {
    *EPS.get_or_init(|| {
        std::env::var("EQ_EPS")
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v > 0.0)
            .unwrap_or(DEFAULT_EPS_GEOM)
    })
}

/// Three-way outcome of a tolerance-aware sign test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: f64, eps: f64) -> Sign {
        if value > eps {
            Sign::Positive
        } else if value < -eps {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}
