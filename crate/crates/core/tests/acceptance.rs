//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; the process exits non-zero if any fails.

mod common;

use std::f64::consts::PI;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::Rng;

use equilibria::equilib2d::{centroid_stable_count, equilibria};
use equilibria::equilib3d::{
    bounding_box_predicates, centroid_quarter_width_check, classify3, ellipsoid_class,
    example_truncated_tetra_fixture, plane_truncation_search, rho_in_exact_3d, rho_in_sampled_3d,
    PlaneGrid, PredicateOutcome, ReductionTarget, WallMode,
};
use equilibria::geom2d::{clip_halfplane, regular_ngon, ConvexPolygon2, Line2, NgonScale, Point2};
use equilibria::geom3d::{
    aabb, bounding_box, generator_truncated_cylinder, platonic, Mat3, Platonic, PlatonicScale,
    Point3,
};
use equilibria::random::{
    random_convex_polygon, random_interior_point2, random_interior_point3, random_sphere_hull,
};
use equilibria::report::sweep_summary_csv;
use equilibria::robust2d::{
    dowker_convexity_check, full_robustness_line_bound, rho_ex_exact, rho_in_exact, rho_in_sampled,
    truncation_sweep, CausticMode, LineSearchConfig,
};
use equilibria::sampling::sample_rng;
use equilibria::Error;

use common::P2;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// RNG domain reserved for this suite, distinct from the library's domains.
const DOMAIN_ACCEPT: u64 = 0xACCE;

fn rng(criterion: u64) -> rand_chacha::ChaCha8Rng {
    sample_rng(20_240_901, DOMAIN_ACCEPT, criterion)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || {
        format!(
            "took {:.1}s, limit {:.0}s",
            t.as_secs_f64(),
            limit.as_secs_f64()
        )
    })
}

fn arr(poly: &ConvexPolygon2) -> Vec<P2> {
    poly.vertices().iter().map(|v| [v.x, v.y]).collect()
}

fn ex_closed_form() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for s in 3..=12 {
        let poly = regular_ngon(s, NgonScale::UnitPerimeter, Point2::new(0.0, 0.0))
            .map_err(|e| e.to_string())?;
        let got = rho_ex_exact(&poly, Point2::new(0.0, 0.0))
            .map_err(|e| e.to_string())?
            .value;
        let want = common::regular_ex_closed(s);
        worst = worst.max((got - want).abs());
        ensure((got - want).abs() <= 1e-9, || {
            format!("S={s}: {got} vs {want}")
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("S=3..12, max error {worst:.1e}"))
}

fn in_closed_form() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in 3..=12 {
        let poly = regular_ngon(s, NgonScale::UnitPerimeter, Point2::new(0.0, 0.0))
            .map_err(|e| e.to_string())?;
        let got = rho_in_exact(&poly, Point2::new(0.0, 0.0), CausticMode::Lines)
            .map_err(|e| e.to_string())?
            .value;
        let want = common::regular_in_closed(s);
        worst = worst.max((got - want).abs());
        ensure((got - want).abs() <= 1e-12, || {
            format!("S={s}: {got} vs {want}")
        })?;
    }
    Ok(format!("S=3..12, max error {worst:.1e}"))
}

/// Hausdorff distance from `poly` to the regular `s`-gon sharing its centroid,
/// mean circumradius and the direction of its first vertex.
fn distance_to_regular(poly: &ConvexPolygon2, s: usize) -> f64 {
    if poly.len() != s {
        return f64::INFINITY;
    }
    let g = poly.centroid();
    let r = poly.vertices().iter().map(|v| v.dist(g)).sum::<f64>() / s as f64;
    let v0 = poly.vertex(0) - g;
    let phase = v0.y.atan2(v0.x);
    let reg = regular_ngon(s, NgonScale::Circumradius(r), g)
        .and_then(|p| {
            let w0 = p.vertex(0) - g;
            let turn = phase - w0.y.atan2(w0.x);
            p.transformed(|z| g + (z - g).rotated(turn))
        })
        .expect("regular polygon");
    poly.hausdorff(&reg)
}

fn extremality() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(3);
    let mut polys: Vec<ConvexPolygon2> = (0..1000)
        .map(|_| random_convex_polygon(&mut rng, 5, 12))
        .collect();
    // Regular controls make sure the equality branch is exercised.
    for s in 5..=12 {
        let p = regular_ngon(
            s,
            NgonScale::Circumradius(0.5 + 0.1 * s as f64),
            Point2::new(0.3, -0.2),
        )
        .unwrap();
        polys.push(p.transformed(|z| z.rotated(0.1 * s as f64)).unwrap());
    }
    let (mut checked, mut skipped_deg, mut ex_skipped, mut equalities) = (0, 0, 0, 0);
    for (i, poly) in polys.iter().enumerate() {
        let Some(s) = centroid_stable_count(poly) else {
            skipped_deg += 1;
            continue;
        };
        let g = poly.centroid();
        checked += 1;
        let rin = rho_in_exact(poly, g, CausticMode::Lines)
            .map_err(|e| format!("#{i}: {e}"))?
            .value;
        let bin = common::regular_in_closed(s);
        ensure(rin <= bin + 1e-12, || {
            format!("#{i}: rho_in {rin} > 1/(2S) = {bin}")
        })?;
        let mut equal = bin - rin <= 1e-12;
        match rho_ex_exact(poly, g) {
            Ok(r) => {
                let bex = common::regular_ex_closed(s);
                ensure(r.value <= bex + 1e-12, || {
                    format!("#{i}: rho_ex {} > {bex}", r.value)
                })?;
                equal |= bex - r.value <= 1e-12;
            }
            Err(Error::TooFewStable(_)) => ex_skipped += 1,
            Err(e) => return Err(format!("#{i}: {e}")),
        }
        if equal {
            equalities += 1;
            let h = distance_to_regular(poly, s);
            ensure(h <= 1e-6, || {
                format!("#{i}: equality but Hausdorff {h:.2e} to regular {s}-gon")
            })?;
        }
    }
    ensure(equalities >= 8, || {
        format!("regular controls did not reach equality ({equalities})")
    })?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{checked} checked, {skipped_deg} degenerate skipped, {ex_skipped} with S<3 skip rho_ex, {equalities} equalities"
    ))
}

fn oracle_2d() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(4);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let poly = random_convex_polygon(&mut rng, 5, 12);
        let p = random_interior_point2(&mut rng, &poly);
        let exact = rho_in_exact(&poly, p, CausticMode::Lines)
            .map_err(|e| e.to_string())?
            .value;
        let sampled = rho_in_sampled(&poly, p, 720, 1e-6)
            .map_err(|e| e.to_string())?
            .value;
        let gap = (exact - sampled).abs();
        worst = worst.max(gap / exact);
        ensure(gap <= (5e-3 * exact).max(2e-6), || {
            format!("#{i}: exact {exact} sampled {sampled}")
        })?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("100 polygons, worst relative gap {worst:.2e}"))
}

fn invariants() -> Outcome {
    let mut rng = rng(5);
    let (mut checked2, mut deg2) = (0, 0);
    for i in 0..10_000 {
        let poly = random_convex_polygon(&mut rng, 3, 12);
        let p = random_interior_point2(&mut rng, &poly);
        let set = equilibria(&poly, p).map_err(|e| format!("2D #{i}: {e}"))?;
        if set.is_degenerate() {
            deg2 += 1;
            continue;
        }
        checked2 += 1;
        ensure(set.stable == set.unstable, || {
            format!("2D #{i}: S={} U={}", set.stable, set.unstable)
        })?;
    }
    let (mut checked3, mut deg3) = (0, 0);
    for i in 0..200 {
        let axes = [
            rng.gen_range(0.5..1.5),
            rng.gen_range(0.5..1.5),
            rng.gen_range(0.5..1.5),
        ];
        let n = rng.gen_range(8..60);
        let poly =
            random_sphere_hull(&mut rng, n, axes).map_err(|e| format!("3D hull #{i}: {e}"))?;
        let euler =
            poly.vertex_count() as i64 - poly.edge_count() as i64 + poly.face_count() as i64;
        ensure(euler == 2, || format!("3D hull #{i}: V-E+F = {euler}"))?;
        for _ in 0..5 {
            let p = random_interior_point3(&mut rng, &poly);
            let set = classify3(&poly, p).map_err(|e| format!("3D #{i}: {e}"))?;
            if set.is_degenerate() {
                deg3 += 1;
                continue;
            }
            checked3 += 1;
            let (s, h, u) = set.counts();
            ensure(s as i64 - h as i64 + u as i64 == 2, || {
                format!("3D #{i}: S={s} H={h} U={u}")
            })?;
        }
    }
    Ok(format!(
        "2D {checked2} checked ({deg2} degenerate), 3D {checked3} checked ({deg3} degenerate)"
    ))
}

/// Unit-surface regular polyhedron whose faces are regular `k`-gons: the
/// centre projects onto each face's incentre, and the nearest wall is at the
/// face inradius.
fn derived_platonic(faces: usize, k: usize) -> f64 {
    let face_area = 1.0 / faces as f64;
    let t = (PI / k as f64).tan();
    let edge = (4.0 * t * face_area / k as f64).sqrt();
    edge / (2.0 * t)
}

fn platonic_internal() -> Outcome {
    let mut detail = Vec::new();
    for (kind, faces, k, quoted) in [
        (Platonic::Cube, 6, 4, 0.2041241),
        (Platonic::Tetra, 4, 3, 0.2193457),
    ] {
        let poly = platonic(kind, PlatonicScale::UnitSurface);
        let c = poly.centroid();
        let exact = rho_in_exact_3d(&poly, c, WallMode::Strips)
            .map_err(|e| e.to_string())?
            .value;
        let derived = derived_platonic(faces, k);
        ensure((exact - derived).abs() <= 1e-9, || {
            format!("{}: {exact} vs derived {derived}", kind.name())
        })?;
        ensure((exact - quoted).abs() <= 5e-8, || {
            format!("{}: {exact} vs quoted {quoted}", kind.name())
        })?;
        let sampled = rho_in_sampled_3d(&poly, c, 2000, 1e-9)
            .map_err(|e| e.to_string())?
            .value;
        let rel = (sampled - exact).abs() / exact;
        ensure(rel <= 1e-2, || {
            format!("{}: oracle {sampled} vs {exact}", kind.name())
        })?;
        detail.push(format!("{} {exact:.7} (oracle rel {rel:.1e})", kind.name()));
    }
    Ok(detail.join(", "))
}

fn tetra_fixture() -> Outcome {
    let a = example_truncated_tetra_fixture().map_err(|e| e.to_string())?;
    let b = example_truncated_tetra_fixture().map_err(|e| e.to_string())?;
    for (name, ok) in &a.checks {
        ensure(*ok, || format!("check failed: {name}"))?;
    }
    ensure(a.counts_original == a.counts_truncated, || {
        "counts differ".into()
    })?;
    ensure(a.rho_truncated.value > a.rho_original.value, || {
        "robustness did not increase".into()
    })?;
    let same = a.rho_original.value.to_bits() == b.rho_original.value.to_bits()
        && a.rho_truncated.value.to_bits() == b.rho_truncated.value.to_bits()
        && a.checks == b.checks
        && a.cut == b.cut;
    ensure(same, || "two runs differ".into())?;
    Ok(format!(
        "counts {:?}, rho {:.6} -> {:.6}",
        a.counts_original, a.rho_original.value, a.rho_truncated.value
    ))
}

fn bounding_box_lemma() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(8);
    let mut elongated = 0;
    while elongated < 100 {
        let b = rng.gen_range(0.3..1.0);
        let a = rng.gen_range(0.2..1.0) * b;
        let c = b * rng.gen_range(7.0..12.0);
        let poly = {
            let n = rng.gen_range(12..60);
            random_sphere_hull(&mut rng, n, [a, b, c])
        }
        .map_err(|e| e.to_string())?;
        let pred = bounding_box_predicates(&poly, &aabb(&poly)).map_err(|e| e.to_string())?;
        match pred.elongation_implies_two_unstable {
            PredicateOutcome::Checked(true) => elongated += 1,
            PredicateOutcome::Checked(false) => {
                return Err(format!("elongated body #{elongated} has U < 2"))
            }
            PredicateOutcome::NotApplicable => continue,
        }
        let (_, _, u) = classify3(&poly, poly.centroid())
            .map_err(|e| e.to_string())?
            .counts();
        ensure(u >= 2, || format!("elongated body #{elongated}: U={u}"))?;
    }
    let mut flat = 0;
    while flat < 100 {
        let b = rng.gen_range(0.5..1.0);
        let c = b * rng.gen_range(1.0..2.0);
        let a = b * rng.gen_range(0.05..0.3);
        let poly = {
            let n = rng.gen_range(12..60);
            random_sphere_hull(&mut rng, n, [b, c, a])
        }
        .map_err(|e| e.to_string())?;
        let pred = bounding_box_predicates(&poly, &aabb(&poly)).map_err(|e| e.to_string())?;
        match pred.flatness_implies_two_stable {
            PredicateOutcome::Checked(true) => flat += 1,
            PredicateOutcome::Checked(false) => return Err(format!("flat body #{flat} has S < 2")),
            PredicateOutcome::NotApplicable => continue,
        }
        let (s, _, _) = classify3(&poly, poly.centroid())
            .map_err(|e| e.to_string())?
            .counts();
        ensure(s >= 2, || format!("flat body #{flat}: S={s}"))?;
    }
    for i in 0..1000 {
        let axes = [
            rng.gen_range(0.2..2.0),
            rng.gen_range(0.2..2.0),
            rng.gen_range(0.2..2.0),
        ];
        let poly = {
            let n = rng.gen_range(6..40);
            random_sphere_hull(&mut rng, n, axes)
        }
        .map_err(|e| e.to_string())?;
        let axis = Point3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let frame = Mat3::rotation(axis, rng.gen_range(0.0..PI));
        ensure(centroid_quarter_width_check(&poly, &aabb(&poly)), || {
            format!("hull #{i}: axis-aligned box")
        })?;
        ensure(
            centroid_quarter_width_check(&poly, &bounding_box(&poly, &frame)),
            || format!("hull #{i}: rotated box"),
        )?;
    }
    within(start, Duration::from_secs(120))?;
    Ok("100 elongated, 100 flat, 1000 quarter-width (two frames each)".into())
}

const GOLDEN_SUMMARY: &str = include_str!("golden/square_sweep_seed7_summary.csv");

fn square() -> ConvexPolygon2 {
    equilibria::geom2d::polygon_new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(1.0, 1.0),
        Point2::new(0.0, 1.0),
    ])
    .unwrap()
}

fn square_sweep() -> Outcome {
    let poly = square();
    let sweep = truncation_sweep(&poly, 100_000, 7, 20).map_err(|e| e.to_string())?;
    for (k, bin) in sweep.bins.iter().enumerate() {
        if bin.total == 0 {
            continue;
        }
        let sum: f64 =
            bin.by_delta.keys().map(|&d| bin.fraction(d)).sum::<f64>() + bin.degenerate_fraction();
        ensure((sum - 1.0).abs() <= 1e-12, || {
            format!("bin {k}: fractions sum to {sum}")
        })?;
    }
    let observed = sweep.observed_deltas();
    ensure(observed.iter().all(|d| (-1..=1).contains(d)), || {
        format!("observed deltas {observed:?}")
    })?;
    let degenerate = sweep.degenerate_count() as f64 / sweep.samples.len() as f64;
    ensure(degenerate < 1e-3, || {
        format!("degenerate fraction {degenerate}")
    })?;

    let mut triangles = 0;
    for s in &sweep.samples {
        let line = Line2::from_normal_offset(s.theta, s.offset);
        let Some(piece) = clip_halfplane(&poly, &line, s.side) else {
            continue;
        };
        if piece.len() == 3 {
            triangles += 1;
            ensure(s.piece_s == Some(3), || {
                format!("triangle piece reports {:?}", s.piece_s)
            })?;
            let oracle = common::centroid_stable(&arr(&piece));
            ensure(oracle == Some(3), || {
                format!("oracle says triangle has {oracle:?}")
            })?;
        }
    }
    ensure(triangles > 0, || "no triangle pieces".into())?;

    let csv = sweep_summary_csv(&sweep);
    ensure(csv == GOLDEN_SUMMARY, || {
        "summary CSV differs from golden file".into()
    })?;
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?
        .install(|| truncation_sweep(&poly, 100_000, 7, 20))
        .map_err(|e| e.to_string())?;
    ensure(single == sweep, || "single-threaded run differs".into())?;
    Ok(format!(
        "deltas {observed:?}, degenerate {:.4}%, {triangles} triangle pieces, golden match",
        100.0 * degenerate
    ))
}

fn line_bound_square() -> Outcome {
    let poly = square();
    let report = full_robustness_line_bound(&poly, LineSearchConfig::default())
        .map_err(|e| e.to_string())?;
    ensure(report.upper_bound, || {
        "report not flagged as an upper bound".into()
    })?;
    let oracle = common::line_bound_oracle(&common::unit_square(), 1800, 640, 1e-12);
    let rel = (report.value - oracle).abs() / oracle;
    ensure(rel <= 1e-3, || {
        format!("search {} vs oracle {oracle}", report.value)
    })?;
    Ok(format!(
        "search {:.9}, oracle {oracle:.9}, rel {rel:.1e}",
        report.value
    ))
}

fn dowker() -> Outcome {
    let a = |n: usize| n as f64 * (PI / n as f64).tan();
    let mut pairs = 0;
    for n in 4..64 {
        for k in 1..n {
            if n - k < 3 || n + k > 64 {
                continue;
            }
            pairs += 1;
            ensure(a(n - k) + a(n + k) > 2.0 * a(n), || {
                format!("oracle fails at n={n}, k={k}")
            })?;
            let lib = dowker_convexity_check(n, k).map_err(|e| e.to_string())?;
            ensure(lib, || format!("library check fails at n={n}, k={k}"))?;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn ellipsoid() -> Outcome {
    for lambda in [1.0, 2.0, 4.0] {
        let class =
            ellipsoid_class(1.0, 2.0 * lambda, 4.0 * lambda * lambda).map_err(|e| e.to_string())?;
        ensure(
            class.stable == 2 && class.unstable == 2 && class.saddles() == 2,
            || format!("lambda {lambda}: {class:?}"),
        )?;
    }
    Ok("lambda 1, 2, 4 give {2,2} with H=2".into())
}

fn cylinder_trend() -> Outcome {
    let mut values = Vec::new();
    for lambda in [2.0, 4.0, 8.0] {
        let body =
            generator_truncated_cylinder(1.0, 4.0 * lambda, 48).map_err(|e| e.to_string())?;
        let r = plane_truncation_search(
            &body,
            ReductionTarget::ReduceAny,
            PlaneGrid::default(),
            1e-6,
            0,
        )
        .map_err(|e| format!("lambda {lambda}: {e}"))?;
        ensure(r.upper_bound, || {
            "report not flagged as an upper bound".into()
        })?;
        values.push(r.value);
    }
    ensure(values.windows(2).all(|w| w[0] <= w[1]), || {
        format!("not nondecreasing: {values:?}")
    })?;
    Ok(format!(
        "lambda 2/4/8 -> {:.5} / {:.5} / {:.5}",
        values[0], values[1], values[2]
    ))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("closed-form external robustness", ex_closed_form),
        ("closed-form internal robustness", in_closed_form),
        ("extremality sweep", extremality),
        ("2D internal oracle equivalence", oracle_2d),
        ("equilibrium invariants", invariants),
        ("platonic internal robustness", platonic_internal),
        ("truncated tetrahedron fixture", tetra_fixture),
        ("bounding-box statements", bounding_box_lemma),
        ("square truncation sweep", square_sweep),
        ("square line-truncation bound", line_bound_square),
        ("circumscribed polygon areas", dowker),
        ("ellipsoid classification", ellipsoid),
        ("truncated cylinder trend", cylinder_trend),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
