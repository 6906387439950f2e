//! Static equilibria of convex bodies and the robustness of their
//! equilibrium counts.
//!
//! A boundary point `q` of a convex body `K` is an equilibrium with respect to
//! a reference point `p` when the supporting line (plane) at `q` is
//! perpendicular to `q - p`. For polygons the stable points sit on edges and
//! the unstable points on vertices; for polyhedra stable points sit on faces,
//! saddles on edges and unstable points on vertices.
//!
//! The crate is split along the two dimensions:
//!
//! * [`geom2d`], [`equilib2d`], [`robust2d`]: convex polygons, their
//!   equilibria and internal / external / line-truncation robustness.
//! * [`geom3d`], [`equilib3d`]: convex polyhedra, face/edge/vertex
//!   classification, wall-based internal robustness, bounding-box predicates
//!   and plane-truncation searches.
//!
//! [`report`] renders results as JSON, CSV and SVG.

// `!(x > 0.0)` is used on purpose so that NaN parameters are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod equilib2d;
pub mod equilib3d;
pub mod error;
pub mod geom2d;
pub mod geom3d;
pub mod random;
pub mod report;
pub mod robust2d;
pub mod sampling;
pub mod tolerance;

pub use error::{Error, Result};
