use serde::{Deserialize, Serialize};

use super::classify3;
use crate::error::{Error, Result};
use crate::geom3d::{BoundingBox, ConvexPolyhedron3};

/// Outcome of a conditional statement evaluated on one body.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "holds", rename_all = "snake_case")]
pub enum PredicateOutcome {
    /// Hypothesis met; carries whether the conclusion holds.
    Checked(bool),
    NotApplicable,
}

impl PredicateOutcome {
    /// False only for a checked, failing conclusion.
    pub fn passes(self) -> bool {
        self != PredicateOutcome::Checked(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxPredicates {
    /// `6b <= c` implies at least two unstable points.
    pub elongation_implies_two_unstable: PredicateOutcome,
    /// `3a < b` implies at least two stable points.
    pub flatness_implies_two_stable: PredicateOutcome,
}

/// Evaluates the two box-shape statements with equilibria taken about the
/// centroid. `bbox` must circumscribe the body.
pub fn bounding_box_predicates(
    poly: &ConvexPolyhedron3,
    bbox: &BoundingBox,
) -> Result<BoxPredicates> {
    let [a, b, c] = bbox.extents();
    let elongated = 6.0 * b <= c;
    let flat = 3.0 * a < b;
    if !elongated && !flat {
        return Ok(BoxPredicates {
            elongation_implies_two_unstable: PredicateOutcome::NotApplicable,
            flatness_implies_two_stable: PredicateOutcome::NotApplicable,
        });
    }
    let set = classify3(poly, poly.centroid())?;
    if set.is_degenerate() {
        return Err(Error::DegenerateConfiguration(
            "degenerate equilibrium about the centroid".into(),
        ));
    }
    let (s, _, u) = set.counts();
    let outcome = |hyp: bool, concl: bool| {
        if hyp {
            PredicateOutcome::Checked(concl)
        } else {
            PredicateOutcome::NotApplicable
        }
    };
    Ok(BoxPredicates {
        elongation_implies_two_unstable: outcome(elongated, u >= 2),
        flatness_implies_two_stable: outcome(flat, s >= 2),
    })
}

/// The centroid is at least a quarter of the box width away from both box
/// faces along each box axis (absolute slack `1e-9`).
pub fn centroid_quarter_width_check(poly: &ConvexPolyhedron3, bbox: &BoundingBox) -> bool {
    let g = poly.centroid() - bbox.center;
    (0..3).all(|i| {
        let h = bbox.half_extents[i];
        let x = bbox.axes[i].dot(g);
        let quarter = 0.5 * h;
        h - x >= quarter - 1e-9 && h + x >= quarter - 1e-9
    })
}
