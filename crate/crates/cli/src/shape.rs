use std::path::Path;

use equilibria::geom2d::{
    polygon_from_json, polygon_new, regular_ngon, ConvexPolygon2, NgonScale, Point2,
};
use equilibria::geom3d::{
    generator_truncated_cylinder, load_off, platonic, ConvexPolyhedron3, Platonic, PlatonicScale,
    Point3,
};
use equilibria::{Error, Result};

/// Facet budget for `cylcut` builtins.
pub const CYLINDER_FACETS: usize = 48;

pub enum Shape {
    Polygon(ConvexPolygon2),
    Polyhedron(ConvexPolyhedron3),
    /// Analytic solid ellipsoid with semi-axes along x, y, z.
    Ellipsoid([f64; 3]),
}

fn numbers(parts: &[&str], spec: &str) -> Result<Vec<f64>> {
    parts
        .iter()
        .map(|p| {
            p.parse::<f64>().map_err(|_| {
                Error::InvalidParameter(format!("bad number '{p}' in builtin '{spec}'"))
            })
        })
        .collect()
}

/// Parses the builtin grammar: `ngon:S`, `rect:a:b`, `square`, platonic
/// names, `cylcut:r:d`, `ellipsoid:a:b:c`.
pub fn builtin(spec: &str) -> Result<Shape> {
    let parts: Vec<&str> = spec.split(':').collect();
    let arity = |n: usize| {
        if parts.len() == n + 1 {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "builtin '{}' takes {n} parameter(s)",
                parts[0]
            )))
        }
    };
    match parts[0] {
        "ngon" => {
            arity(1)?;
            let s: usize = parts[1]
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad side count '{}'", parts[1])))?;
            Ok(Shape::Polygon(regular_ngon(
                s,
                NgonScale::UnitPerimeter,
                Point2::ORIGIN,
            )?))
        }
        "square" => {
            arity(0)?;
            rect(1.0, 1.0)
        }
        "rect" => {
            arity(2)?;
            let v = numbers(&parts[1..], spec)?;
            rect(v[0], v[1])
        }
        "cylcut" => {
            arity(2)?;
            let v = numbers(&parts[1..], spec)?;
            Ok(Shape::Polyhedron(generator_truncated_cylinder(
                v[0],
                v[1],
                CYLINDER_FACETS,
            )?))
        }
        "ellipsoid" => {
            arity(3)?;
            let v = numbers(&parts[1..], spec)?;
            if v.iter().any(|&x| !(x > 0.0)) {
                return Err(Error::InvalidParameter("semi-axes must be positive".into()));
            }
            Ok(Shape::Ellipsoid([v[0], v[1], v[2]]))
        }
        name => {
            arity(0)?;
            let kind: Platonic = name
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("unknown builtin '{spec}'")))?;
            Ok(Shape::Polyhedron(platonic(
                kind,
                PlatonicScale::UnitSurface,
            )))
        }
    }
}

fn rect(a: f64, b: f64) -> Result<Shape> {
    Ok(Shape::Polygon(polygon_new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(a, 0.0),
        Point2::new(a, b),
        Point2::new(0.0, b),
    ])?))
}

pub fn polygon_file(path: &Path) -> Result<Shape> {
    Ok(Shape::Polygon(polygon_from_json(
        &std::fs::read_to_string(path)?,
    )?))
}

pub fn off_file(path: &Path) -> Result<Shape> {
    Ok(Shape::Polyhedron(load_off(path)?))
}

pub enum Reference {
    Centroid,
    Point(Vec<f64>),
}

pub fn parse_reference(text: &str) -> Result<Reference> {
    if text == "centroid" {
        return Ok(Reference::Centroid);
    }
    let v = text
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<std::result::Result<Vec<f64>, _>>()
        .map_err(|_| Error::InvalidParameter(format!("bad reference '{text}'")))?;
    if !(2..=3).contains(&v.len()) {
        return Err(Error::InvalidParameter(format!(
            "reference '{text}' needs 2 or 3 coordinates"
        )));
    }
    Ok(Reference::Point(v))
}

impl Reference {
    pub fn point2(&self, poly: &ConvexPolygon2) -> Result<Point2> {
        match self {
            Reference::Centroid => Ok(poly.centroid()),
            Reference::Point(v) if v.len() == 2 => Ok(Point2::new(v[0], v[1])),
            Reference::Point(_) => Err(Error::InvalidParameter(
                "2D shapes need a 2D reference".into(),
            )),
        }
    }

    pub fn point3(&self, poly: &ConvexPolyhedron3) -> Result<Point3> {
        match self {
            Reference::Centroid => Ok(poly.centroid()),
            Reference::Point(v) if v.len() == 3 => Ok(Point3::new(v[0], v[1], v[2])),
            Reference::Point(_) => Err(Error::InvalidParameter(
                "3D shapes need a 3D reference".into(),
            )),
        }
    }
}
