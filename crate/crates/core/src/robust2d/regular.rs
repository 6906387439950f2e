use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularKind {
    Internal,
    External,
}

/// Closed-form robustness of the regular `S`-gon about its center:
/// `1/(2S)` (internal) and `(tan(π/S) - π/S) / (S tan(π/S))` (external).
/// Both are the maxima over all bodies with `S` stable points.
pub fn rho_regular_closed(stable: usize, kind: RegularKind) -> Result<f64> {
    if stable < 3 {
        return Err(Error::InvalidParameter(format!(
            "closed forms need S >= 3, got {stable}"
        )));
    }
    let s = stable as f64;
    Ok(match kind {
        RegularKind::Internal => 0.5 / s,
        RegularKind::External => {
            let t = (PI / s).tan();
            (t - PI / s) / (s * t)
        }
    })
}

/// Area of the regular `n`-gon circumscribed about the unit circle.
pub fn dowker_area(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
    }
    let n = n as f64;
    Ok(n * (PI / n).tan())
}

/// Strict convexity of the circumscribed areas: `a(n-k) + a(n+k) > 2 a(n)`.
pub fn dowker_convexity_check(n: usize, k: usize) -> Result<bool> {
    if n < 3 || k == 0 || k + 2 >= n {
        return Err(Error::InvalidParameter(format!(
            "need n >= 3 and 0 < k < n - 2, got n={n}, k={k}"
        )));
    }
    Ok(dowker_area(n - k)? + dowker_area(n + k)? > 2.0 * dowker_area(n)?)
}
