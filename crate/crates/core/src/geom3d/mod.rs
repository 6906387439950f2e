//! Convex polyhedra: validation, hulls, mass properties, boxes, cuts and generators.

mod bbox;
mod clip;
mod hull;
mod off;
mod point;
mod polyhedron;
mod shapes;

pub use bbox::{aabb, bounding_box, BoundingBox};
pub use clip::clip_halfspace3;
pub use hull::{hull3, MERGE_ANGLE};
pub use off::{load_off, read_off, save_off, write_off};
pub use point::{Mat3, Plane, Point3};
pub use polyhedron::{polyhedron_new, ConvexPolyhedron3, Edge};
pub use shapes::{
    generator_ellipsoid_mesh, generator_prism, generator_truncated_cylinder, platonic, Platonic,
    PlatonicScale,
};
