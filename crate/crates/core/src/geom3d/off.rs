use std::fmt::Write as _;
use std::path::Path;

use super::point::Point3;
use super::polyhedron::{polyhedron_new, ConvexPolyhedron3};
use crate::error::{Error, Result};

/// OFF text with shortest round-trip decimal coordinates.
pub fn write_off(poly: &ConvexPolyhedron3) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "OFF");
    let _ = writeln!(
        s,
        "{} {} {}",
        poly.vertex_count(),
        poly.face_count(),
        poly.edge_count()
    );
    for v in poly.vertices() {
        let _ = writeln!(s, "{:?} {:?} {:?}", v.x, v.y, v.z);
    }
    for f in poly.faces() {
        let _ = write!(s, "{}", f.len());
        for i in f {
            let _ = write!(s, " {i}");
        }
        s.push('\n');
    }
    s
}

/// Parses OFF text and re-validates it as a convex polyhedron.
pub fn read_off(text: &str) -> Result<ConvexPolyhedron3> {
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .peekable();
    if tokens.peek() == Some(&"OFF") {
        tokens.next();
    }
    let mut next = |what: &str| {
        tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("unexpected end of OFF data reading {what}")))
    };
    let count = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad count '{t}'")))
    };
    let nv = count(next("vertex count")?)?;
    let nf = count(next("face count")?)?;
    let _ne = count(next("edge count")?)?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let mut c = [0.0; 3];
        for x in &mut c {
            let t = next("coordinate")?;
            *x = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad coordinate '{t}'")))?;
        }
        vertices.push(Point3::new(c[0], c[1], c[2]));
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let k = count(next("face size")?)?;
        let mut f = Vec::with_capacity(k);
        for _ in 0..k {
            f.push(count(next("face index")?)?);
        }
        faces.push(f);
    }
    polyhedron_new(vertices, faces)
}

pub fn load_off(path: &Path) -> Result<ConvexPolyhedron3> {
    read_off(&std::fs::read_to_string(path)?)
}

pub fn save_off(poly: &ConvexPolyhedron3, path: &Path) -> Result<()> {
    std::fs::write(path, write_off(poly))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3d::{platonic, Platonic, PlatonicScale};

    #[test]
    fn round_trip_is_exact() {
        let d = platonic(Platonic::Dodeca, PlatonicScale::UnitSurface);
        let back = read_off(&write_off(&d)).unwrap();
        assert_eq!(back.vertices(), d.vertices());
        assert_eq!(back.faces(), d.faces());
    }

    #[test]
    fn comments_and_errors() {
        let text = "OFF # cube\n8 6 12\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n1 0 1\n0 1 1\n1 1 1\n\
                    4 0 2 3 1\n4 4 5 7 6\n4 0 1 5 4\n4 2 6 7 3\n4 0 4 6 2\n4 1 3 7 5\n";
        assert_eq!(read_off(text).unwrap().face_count(), 6);
        assert!(matches!(read_off("OFF\n8 6"), Err(Error::Parse(_))));
        assert!(matches!(
            read_off("OFF\n1 1 0\nx 0 0\n"),
            Err(Error::Parse(_))
        ));
    }
}
