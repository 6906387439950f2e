//! Planar convex-polygon kernel.
//!
//! Polygons are stored counterclockwise with the lowest (then leftmost)
//! vertex first. All predicates use the module-wide tolerance from
//! [`crate::tolerance`], scaled by the polygon diameter.

mod clip;
mod disk;
mod point;
mod polygon;
mod strip;

pub use clip::{clip_halfplane, Side};
pub use disk::{area_inside_disk, area_outside_disk};
pub use point::{dist_point_to_line, dist_point_to_ray, Line2, Point2, Ray2};
pub use polygon::{
    convex_hull2, polygon_from_json, polygon_new, regular_ngon, ConvexPolygon2, NgonScale,
    PolygonFile,
};
pub use strip::{strip_cover_admits, strip_cover_slack, STRIP_COVER_TOL};
