//! `eqrobust`: equilibrium classification and robustness of convex bodies.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 degenerate configuration,
//! 3 invalid input, 4 fixture failure. Every JSON payload carries a
//! `status` field matching the exit code.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod shape;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use equilibria::equilib2d::equilibria;
use equilibria::equilib3d::{
    classify3, ellipsoid_class, example_truncated_tetra_fixture, plane_truncation_search,
    rho_in_exact_3d, rho_in_sampled_3d, PlaneGrid, ReductionTarget, WallMode,
};
use equilibria::report::{
    class_json, equilibria_json_2d, equilibria_json_3d, sweep_samples_csv, sweep_summary_csv,
    sweep_svg, with_status,
};
use equilibria::robust2d::{
    dowker_convexity_check, full_robustness_line_bound, rho_ex_exact, rho_in_exact, rho_in_sampled,
    truncation_sweep, CausticMode, LineSearchConfig,
};
use equilibria::Error;

use shape::{builtin, off_file, parse_reference, polygon_file, Shape};

#[derive(Parser)]
#[command(
    name = "eqrobust",
    version,
    about = "Equilibria of convex bodies and the robustness of their counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify equilibria with respect to a reference point.
    Analyze {
        #[command(flatten)]
        shape: ShapeArgs,
        /// `centroid` or explicit coordinates `x,y` / `x,y,z`.
        #[arg(long = "ref", default_value = "centroid")]
        reference: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute a robustness measure.
    Robust {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long = "ref", default_value = "centroid")]
        reference: String,
        /// Use the sampled estimator for `--kind in` with this many directions.
        #[arg(long)]
        samples: Option<usize>,
        /// Line directions (2D) or plane normals (3D) of the search grid.
        #[arg(long)]
        grid_theta: Option<usize>,
        /// Offsets per direction of the search grid.
        #[arg(long)]
        grid_offset: Option<usize>,
        /// Refinement tolerance (relative to the diameter) or bisection
        /// tolerance of sampled estimators.
        #[arg(long)]
        tol: Option<f64>,
        /// Seed for the rotation of the 3D normal grid.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Random line truncations of a polygon, binned by retained area.
    Sweep {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Number of random lines (each yields two pieces).
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        bins: usize,
        /// Directory receiving samples.csv, summary.csv and summary.svg;
        /// without it the summary is printed in `--format`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the truncated-tetrahedron example and the Dowker checks.
    Fixtures {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct ShapeArgs {
    /// Builtin shape, e.g. `square`, `ngon:5`, `rect:2:1`, `cube`, `cylcut:1:20`, `ellipsoid:1:2:4`.
    #[arg(long)]
    builtin: Option<String>,
    /// Polygon JSON file `{"vertices": [[x, y], ...]}`.
    #[arg(long)]
    poly: Option<PathBuf>,
    /// Polyhedron OFF file.
    #[arg(long)]
    off: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    In,
    Ex,
    FullLine,
    PartialS,
    PartialU,
    Partial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

enum Failure {
    Core(Error),
    Fixture(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Core(e.into())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 1,
        Error::DegenerateConfiguration(_) | Error::DegeneratePresent => 2,
        _ => 3,
    }
}

fn load_shape(args: &ShapeArgs, default: Option<&str>) -> Result<Shape, Error> {
    if let Some(b) = &args.builtin {
        builtin(b)
    } else if let Some(p) = &args.poly {
        polygon_file(p)
    } else if let Some(p) = &args.off {
        off_file(p)
    } else if let Some(d) = default {
        builtin(d)
    } else {
        Err(Error::InvalidParameter(
            "one of --builtin, --poly, --off is required".into(),
        ))
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_json(v: &Value, output: &OutputArgs) -> Result<(), Error> {
    if output.format != Format::Json {
        return Err(Error::InvalidParameter(
            "this command only writes JSON".into(),
        ));
    }
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    emit(&text, output.out.as_deref())
}

fn analyze(shape: &ShapeArgs, reference: &str, output: &OutputArgs) -> Result<u8, Failure> {
    let reference = parse_reference(reference)?;
    let (v, degenerate) = match load_shape(shape, None)? {
        Shape::Polygon(p) => {
            let set = equilibria(&p, reference.point2(&p)?)?;
            (equilibria_json_2d(&set), set.is_degenerate())
        }
        Shape::Polyhedron(p) => {
            let set = classify3(&p, reference.point3(&p)?)?;
            (equilibria_json_3d(&set), set.is_degenerate())
        }
        Shape::Ellipsoid([a, b, c]) => {
            if !matches!(reference, shape::Reference::Centroid) {
                return Err(Error::InvalidParameter(
                    "ellipsoids are classified about their center".into(),
                )
                .into());
            }
            let class = ellipsoid_class(a, b, c)?;
            (
                class_json(&class, "analytic classification about the center"),
                false,
            )
        }
    };
    emit_json(&v, output)?;
    Ok(if degenerate { 2 } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn robust(
    shape: &ShapeArgs,
    kind: Kind,
    reference: &str,
    samples: Option<usize>,
    grid_theta: Option<usize>,
    grid_offset: Option<usize>,
    tol: Option<f64>,
    seed: u64,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    let reference = parse_reference(reference)?;
    if let Some(t) = tol {
        if !(t > 0.0) {
            return Err(Error::InvalidParameter("--tol must be positive".into()).into());
        }
    }
    let unsupported = |what: &str| {
        Err(Failure::Core(Error::InvalidParameter(format!(
            "--kind {what}"
        ))))
    };
    let result = match load_shape(shape, None)? {
        Shape::Polygon(p) => match kind {
            Kind::In => {
                let q = reference.point2(&p)?;
                match samples {
                    Some(n) => {
                        rho_in_sampled(&p, q, n, tol.unwrap_or(1e-9)).map(|r| with_status(&r))
                    }
                    None => rho_in_exact(&p, q, CausticMode::Lines).map(|r| with_status(&r)),
                }
            }
            Kind::Ex => rho_ex_exact(&p, reference.point2(&p)?).map(|r| with_status(&r)),
            Kind::FullLine => {
                let d = LineSearchConfig::default();
                let cfg = LineSearchConfig {
                    grid_theta: grid_theta.unwrap_or(d.grid_theta),
                    grid_offset: grid_offset.unwrap_or(d.grid_offset),
                    refine_tol: tol.unwrap_or(d.refine_tol),
                };
                full_robustness_line_bound(&p, cfg).map(|r| with_status(&r))
            }
            _ => return unsupported("partial-* applies to polyhedra"),
        },
        Shape::Polyhedron(p) => match kind {
            Kind::In => {
                let q = reference.point3(&p)?;
                match samples {
                    Some(n) => {
                        rho_in_sampled_3d(&p, q, n, tol.unwrap_or(1e-9)).map(|r| with_status(&r))
                    }
                    None => rho_in_exact_3d(&p, q, WallMode::Strips).map(|r| with_status(&r)),
                }
            }
            Kind::PartialS | Kind::PartialU | Kind::Partial => {
                let target = match kind {
                    Kind::PartialS => ReductionTarget::ReduceS,
                    Kind::PartialU => ReductionTarget::ReduceU,
                    _ => ReductionTarget::ReduceAny,
                };
                let d = PlaneGrid::default();
                let grid = PlaneGrid {
                    normals: grid_theta.unwrap_or(d.normals),
                    offsets: grid_offset.unwrap_or(d.offsets),
                };
                plane_truncation_search(&p, target, grid, tol.unwrap_or(1e-6), seed)
                    .map(|r| with_status(&r))
            }
            _ => return unsupported("ex and full-line apply to polygons"),
        },
        Shape::Ellipsoid(_) => {
            return unsupported("robustness of analytic ellipsoids is not computed")
        }
    };
    let v = match result {
        Ok(v) => v,
        Err(Error::NoReductionFound) => json!({
            "status": "no_reduction_found",
            "message": Error::NoReductionFound.to_string(),
        }),
        Err(e) => return Err(e.into()),
    };
    emit_json(&v, output)?;
    Ok(0)
}

fn sweep(
    shape: &ShapeArgs,
    samples: usize,
    seed: u64,
    bins: usize,
    out: Option<&Path>,
    format: Format,
) -> Result<u8, Failure> {
    let Shape::Polygon(p) = load_shape(shape, Some("square"))? else {
        return Err(Error::InvalidParameter("sweep needs a polygon".into()).into());
    };
    let s = truncation_sweep(&p, samples, seed, bins)?;
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join("samples.csv"), sweep_samples_csv(&s))?;
            std::fs::write(dir.join("summary.csv"), sweep_summary_csv(&s))?;
            std::fs::write(dir.join("summary.svg"), sweep_svg(&s))?;
        }
        None => {
            let text = match format {
                Format::Csv => sweep_summary_csv(&s),
                Format::Svg => sweep_svg(&s),
                Format::Json => {
                    let v = json!({
                        "status": "ok",
                        "stable_count": s.stable_count,
                        "records": s.samples.len(),
                        "degenerate": s.degenerate_count(),
                        "observed_deltas": s.observed_deltas(),
                        "bins": s.bins,
                    });
                    serde_json::to_string_pretty(&v).map_err(Error::from)? + "\n"
                }
            };
            emit(&text, None)?;
        }
    }
    Ok(0)
}

fn fixtures(output: &OutputArgs) -> Result<u8, Failure> {
    let tetra = example_truncated_tetra_fixture()?;
    let mut dowker_failures = Vec::new();
    let mut checked = 0usize;
    for n in 4..=63usize {
        for k in 1..n {
            if n - k < 3 || n + k > 64 {
                continue;
            }
            checked += 1;
            if !dowker_convexity_check(n, k)? {
                dowker_failures.push(json!({ "n": n, "k": k }));
            }
        }
    }
    let tetra_ok = tetra.passed();
    let passed = tetra_ok && dowker_failures.is_empty();
    let v = json!({
        "status": if passed { "ok" } else { "fixture_failure" },
        "truncated_tetrahedron": {
            "passed": tetra_ok,
            "checks": tetra.checks.iter().map(|(name, ok)| json!({ "check": name, "passed": ok })).collect::<Vec<_>>(),
            "rho_in_original": tetra.rho_original.value,
            "rho_in_truncated": tetra.rho_truncated.value,
            "surface_truncated": tetra.surface_truncated,
            "counts_original": tetra.counts_original,
            "counts_truncated": tetra.counts_truncated,
        },
        "dowker": {
            "passed": dowker_failures.is_empty(),
            "pairs_checked": checked,
            "failures": dowker_failures,
        },
    });
    if passed {
        emit_json(&v, output)?;
        Ok(0)
    } else {
        Err(Failure::Fixture(v))
    }
}

fn main() -> ExitCode {
    // clap's own usage errors would exit 2, which is reserved for degeneracy
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Analyze {
            shape,
            reference,
            output,
        } => analyze(shape, reference, output),
        Command::Robust {
            shape,
            kind,
            reference,
            samples,
            grid_theta,
            grid_offset,
            tol,
            seed,
            output,
        } => robust(
            shape,
            *kind,
            reference,
            *samples,
            *grid_theta,
            *grid_offset,
            *tol,
            *seed,
            output,
        ),
        Command::Sweep {
            shape,
            samples,
            seed,
            bins,
            out,
            format,
        } => sweep(shape, *samples, *seed, *bins, out.as_deref(), *format),
        Command::Fixtures { output } => fixtures(output),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Fixture(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).unwrap_or_default());
            eprintln!("error: fixture checks failed");
            ExitCode::from(4)
        }
        Err(Failure::Core(e)) => {
            let code = exit_code(&e);
            let status = match code {
                1 => "io_error",
                2 => "degenerate",
                _ => "invalid_input",
            };
            println!(
                "{}",
                json!({ "status": status, "code": code, "message": e.to_string() })
            );
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
