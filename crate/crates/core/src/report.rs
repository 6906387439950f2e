//! JSON, CSV and SVG renderings of results.
//!
//! Floating-point values are written in their shortest round-trip decimal
//! form, so parsing the output restores the exact values.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::equilib2d::{Carrier2, EquilibriumSet2};
use crate::equilib3d::{Carrier3, EquilibriumClass, EquilibriumSet3};
use crate::robust2d::{Sweep, SweepBin};

/// ΔS categories with their own summary column.
pub const SUMMARY_DELTAS: [i64; 4] = [-2, -1, 0, 1];

pub fn equilibria_json_2d(set: &EquilibriumSet2) -> Value {
    let points: Vec<Value> = set
        .points
        .iter()
        .map(|e| {
            let (carrier, index) = match e.carrier {
                Carrier2::Edge(i) => ("edge", i),
                Carrier2::Vertex(i) => ("vertex", i),
            };
            json!({
                "kind": e.kind,
                "x": e.location.x,
                "y": e.location.y,
                "carrier": carrier,
                "index": index,
                "degenerate": e.degenerate,
            })
        })
        .collect();
    json!({
        "status": if set.is_degenerate() { "degenerate" } else { "ok" },
        "dimension": 2,
        "reference": [set.reference.x, set.reference.y],
        "S": set.stable,
        "U": set.unstable,
        "points": points,
    })
}

pub fn equilibria_json_3d(set: &EquilibriumSet3) -> Value {
    let (s, h, u) = set.counts();
    let points: Vec<Value> = set
        .points()
        .map(|e| {
            let (carrier, index) = match e.carrier {
                Carrier3::Face(i) => ("face", i),
                Carrier3::Edge(i) => ("edge", i),
                Carrier3::Vertex(i) => ("vertex", i),
            };
            json!({
                "kind": e.kind,
                "x": e.location.x,
                "y": e.location.y,
                "z": e.location.z,
                "carrier": carrier,
                "index": index,
                "degenerate": e.degenerate,
            })
        })
        .collect();
    json!({
        "status": if set.is_degenerate() { "degenerate" } else { "ok" },
        "dimension": 3,
        "reference": [set.reference.x, set.reference.y, set.reference.z],
        "S": s,
        "H": h,
        "U": u,
        "points": points,
    })
}

/// Class of an analytic body (no point list).
pub fn class_json(class: &EquilibriumClass, note: &str) -> Value {
    json!({
        "status": "ok",
        "dimension": 3,
        "S": class.stable,
        "H": class.saddles(),
        "U": class.unstable,
        "points": [],
        "note": note,
    })
}

/// Serializes a report and adds `"status": "ok"`.
pub fn with_status<T: serde::Serialize>(report: &T) -> Value {
    let mut v = serde_json::to_value(report).expect("reports serialize");
    if let Value::Object(map) = &mut v {
        map.insert("status".into(), json!("ok"));
    }
    v
}

pub fn sweep_samples_csv(sweep: &Sweep) -> String {
    let mut s = String::from("theta,offset,side,relative_area,piece_S,delta_S,degenerate\n");
    for r in &sweep.samples {
        let side = match r.side {
            crate::geom2d::Side::Positive => "positive",
            crate::geom2d::Side::Negative => "negative",
        };
        let piece = r.piece_s.map_or(String::new(), |v| v.to_string());
        let delta = r.delta_s.map_or(String::new(), |v| v.to_string());
        let _ = writeln!(
            s,
            "{:?},{:?},{side},{:?},{piece},{delta},{}",
            r.theta, r.offset, r.relative_area, r.degenerate
        );
    }
    s
}

fn other_fraction(bin: &SweepBin) -> f64 {
    if bin.total == 0 {
        return 0.0;
    }
    let other: usize = bin
        .by_delta
        .iter()
        .filter(|(d, _)| !SUMMARY_DELTAS.contains(d))
        .map(|(_, c)| c)
        .sum();
    other as f64 / bin.total as f64
}

/// One row per relative-area bin; the trailing `frac_other` column collects
/// ΔS values outside `-2..=1`.
pub fn sweep_summary_csv(sweep: &Sweep) -> String {
    let mut s = String::from(
        "bin_lo,bin_hi,frac_dS_-2,frac_dS_-1,frac_dS_0,frac_dS_+1,frac_degenerate,frac_other\n",
    );
    for b in &sweep.bins {
        let _ = write!(s, "{:?},{:?}", b.lo, b.hi);
        for d in SUMMARY_DELTAS {
            let _ = write!(s, ",{:?}", b.fraction(d));
        }
        let _ = writeln!(s, ",{:?},{:?}", b.degenerate_fraction(), other_fraction(b));
    }
    s
}

const SVG_W: f64 = 800.0;
const SVG_H: f64 = 600.0;
const MARGIN: (f64, f64, f64, f64) = (70.0, 150.0, 40.0, 60.0); // left, right, top, bottom

/// Stacked-area chart of the summary: relative area on x, fractions on y.
pub fn sweep_svg(sweep: &Sweep) -> String {
    let (ml, mr, mt, mb) = MARGIN;
    let pw = SVG_W - ml - mr;
    let ph = SVG_H - mt - mb;
    let x = |v: f64| ml + v * pw;
    let y = |v: f64| mt + (1.0 - v) * ph;
    let layers: [(&str, &str); 6] = [
        ("ΔS = −2", "#5e3c99"),
        ("ΔS = −1", "#e66101"),
        ("ΔS = 0", "#b2abd2"),
        ("ΔS = +1", "#1b9e77"),
        ("other", "#999999"),
        ("degenerate", "#222222"),
    ];
    let value = |b: &SweepBin, k: usize| match k {
        0..=3 => b.fraction(SUMMARY_DELTAS[k]),
        4 => other_fraction(b),
        _ => b.degenerate_fraction(),
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" viewBox="0 0 800 600" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(s, r#"<rect width="800" height="600" fill="white"/>"#);
    let bins: Vec<&SweepBin> = sweep.bins.iter().filter(|b| b.total > 0).collect();
    let mut lower = vec![0.0; bins.len()];
    for (k, (_, color)) in layers.iter().enumerate() {
        if bins.is_empty() {
            break;
        }
        let upper: Vec<f64> = bins
            .iter()
            .zip(&lower)
            .map(|(b, l)| l + value(b, k))
            .collect();
        let mut pts = Vec::with_capacity(2 * bins.len());
        for (b, u) in bins.iter().zip(&upper) {
            pts.push(format!("{:.2},{:.2}", x(0.5 * (b.lo + b.hi)), y(*u)));
        }
        for (b, l) in bins.iter().zip(&lower).rev() {
            pts.push(format!("{:.2},{:.2}", x(0.5 * (b.lo + b.hi)), y(*l)));
        }
        let _ = writeln!(
            s,
            r#"<polygon points="{}" fill="{color}" stroke="none"/>"#,
            pts.join(" ")
        );
        lower = upper;
    }
    let _ = writeln!(
        s,
        r#"<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );
    for i in 0..=5 {
        let v = i as f64 / 5.0;
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{v:.1}</text>"#,
            x(v),
            y(0.0) + 20.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{v:.1}</text>"#,
            ml - 8.0,
            y(v) + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">relative area of the retained piece</text>"#,
        ml + 0.5 * pw,
        SVG_H - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">fraction of pieces</text>"#,
        mt + 0.5 * ph,
        mt + 0.5 * ph
    );
    for (k, (label, color)) in layers.iter().enumerate() {
        let ly = mt + 20.0 + 24.0 * k as f64;
        let _ = writeln!(
            s,
            r#"<rect x="{:.2}" y="{:.2}" width="14" height="14" fill="{color}"/><text x="{:.2}" y="{:.2}">{label}</text>"#,
            SVG_W - mr + 15.0,
            ly - 11.0,
            SVG_W - mr + 35.0,
            ly
        );
    }
    s.push_str("</svg>\n");
    s
}
