//! Robustness of the equilibrium count of convex polygons.
//!
//! * internal: how far the reference point can move (boundary fixed) before
//!   the stable count changes, normalized by the perimeter;
//! * external: the smallest relative area that must be cut away (reference
//!   fixed) to lose a stable point;
//! * full: the same with the reference point following the centroid, bounded
//!   from above by searching single-line truncations;
//! * average: Monte Carlo statistics of random line truncations.

mod average;
mod external;
mod full;
mod internal;
mod regular;
mod sweep;

use serde::{Deserialize, Serialize};

use crate::geom2d::{Point2, Side};

pub use average::{average_robustness, AverageRobustness};
pub use external::{external_sectors, rho_ex_exact, ExternalSector};
pub use full::{full_robustness_line_bound, LineSearchConfig};
pub use internal::{rho_in_exact, rho_in_sampled, CausticMode};
pub use regular::{dowker_area, dowker_convexity_check, rho_regular_closed, RegularKind};
pub use sweep::{sample_line, truncation_sweep, Sweep, SweepBin, TruncationSample};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RobustnessKind {
    Internal,
    External,
    FullLineBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Sampled,
    Search,
}

/// Feature achieving the minimum in a robustness computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness2 {
    /// Line (or inward ray) through `vertex` perpendicular to `edge`.
    CausticLine {
        vertex: usize,
        edge: usize,
        nearest: Point2,
    },
    /// Direction in which the sampled displacement was smallest.
    Direction { angle: f64 },
    /// Sector between stable points `index` and `index + 1`.
    Sector { index: usize, radius: f64 },
    /// Cutting line `{z : (cos θ, sin θ)·z = offset}`; `side` is the retained
    /// piece.
    CuttingLine { theta: f64, offset: f64, side: Side },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessReport2 {
    pub kind: RobustnessKind,
    /// Dimensionless: internal values are divided by the perimeter, external
    /// and full values are area fractions.
    pub value: f64,
    pub witness: Witness2,
    pub method: Method,
    /// The value bounds the true robustness from above rather than equal it.
    pub upper_bound: bool,
    pub stable_count: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}
