use std::fmt::Write as _;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sfcurves::analysis::{run_property, CheckOptions, Property, Verdict, DEFAULT_SEED};
use sfcurves::engine::{generate_full_path, squared_path, OriginMode, Path};
use sfcurves::{format_definition, generate, parse_definition, FixedCurve, TraversalDefinition, TraversalKind};

#[derive(Parser)]
#[command(name = "sfcurves", version, about = "Describe, enumerate, check and plot self-similar traversals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the definition of a traversal.
    Describe(SourceArgs),
    /// Print the cell centres visited at a given depth, one point per line.
    Path(PathArgs),
    /// Check properties of a traversal; exits 1 unless every check holds.
    Check(CheckArgs),
    /// Draw the path as an SVG polyline (2 or 3 dimensions).
    Plot(PlotArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// A family name followed by a dimension, a built-in curve name, a
    /// definition file, or `-` for standard input.
    source: String,
    /// Dimension, when `source` is a family name.
    dim: Option<usize>,
}

#[derive(Args)]
struct PathArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 2)]
    depth: usize,
    /// 2 squares the traversal into d*d dimensions.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    exponent: u8,
    /// centre, corner, first or last.
    #[arg(long, default_value = "corner")]
    origin: String,
    /// Print 0-based cell indices instead of centres.
    #[arg(long)]
    cells: bool,
    /// Start with comment lines describing the output.
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 2)]
    depth: usize,
    /// Comma-separated property names; all of them when omitted.
    #[arg(long, value_delimiter = ',')]
    property: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct PlotArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 2)]
    depth: usize,
    #[arg(long)]
    out: PathBuf,
}

/// A resolved source: the definition plus what to call it in reports.
struct Source {
    def: TraversalDefinition,
    name: String,
    kind: Option<TraversalKind>,
}

fn load(args: &SourceArgs) -> Result<Source, String> {
    if args.source == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| format!("reading standard input: {e}"))?;
        let def = parse_definition(&text).map_err(|e| format!("standard input: {e}"))?;
        return Ok(Source { def, name: "stdin".into(), kind: None });
    }
    if let Some(d) = args.dim {
        let kind: TraversalKind = args.source.parse().map_err(|e| format!("{e}"))?;
        let def = generate(kind, d).map_err(|e| format!("{kind} in {d} dimensions: {e}"))?;
        return Ok(Source { def, name: kind.name().into(), kind: Some(kind) });
    }
    if let Ok(curve) = args.source.parse::<FixedCurve>() {
        return Ok(Source { def: curve.definition(), name: curve.name().into(), kind: None });
    }
    match std::fs::read_to_string(&args.source) {
        Ok(text) => {
            let def = parse_definition(&text).map_err(|e| format!("{}: {e}", args.source))?;
            Ok(Source { def, name: args.source.clone(), kind: None })
        }
        Err(_) if args.source.parse::<TraversalKind>().is_ok() => {
            Err(format!("{} needs a dimension, e.g. `{} 3`", args.source, args.source))
        }
        Err(e) => Err(format!("{}: {e}", args.source)),
    }
}

fn describe(args: &SourceArgs, out: &mut impl Write) -> Result<ExitCode, String> {
    let src = load(args)?;
    writeln!(out, "{}", format_definition(&src.def)).map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn path(args: &PathArgs, out: &mut impl Write) -> Result<ExitCode, String> {
    let src = load(&args.source)?;
    let origin: OriginMode = args.origin.parse().map_err(|e| format!("--origin: {e}"))?;
    let path = match args.exponent {
        1 => generate_full_path(&src.def, args.depth, origin),
        _ => squared_path(&src.def, args.depth).map(|p| p.with_origin(origin)),
    }
    .map_err(|e| e.to_string())?;
    if args.cells && !src.def.is_cubic() {
        return Err("--cells needs a traversal of a cube".into());
    }
    let io = |e: io::Error| e.to_string();
    if args.header {
        writeln!(out, "# {} d={} depth={} exponent={}", src.name, src.def.dim(), args.depth, args.exponent)
            .map_err(io)?;
        if args.cells {
            writeln!(out, "# cells: 0-based indices, {} per axis", path.cube_width() / path.units()).map_err(io)?;
        } else {
            writeln!(
                out,
                "# origin={} units={} per cell, cube width {}",
                origin,
                path.units(),
                path.cube_width()
            )
            .map_err(io)?;
        }
    }
    let mut line = String::new();
    let mut emit = |point: &[i64]| -> io::Result<()> {
        line.clear();
        for (k, x) in point.iter().enumerate() {
            if k > 0 {
                line.push(' ');
            }
            let _ = write!(line, "{x}");
        }
        writeln!(out, "{line}")
    };
    if args.cells {
        for cell in path.cells() {
            emit(&cell).map_err(io)?;
        }
    } else {
        for point in path.iter() {
            emit(point).map_err(io)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check(args: &CheckArgs, out: &mut impl Write) -> Result<ExitCode, String> {
    let src = load(&args.source)?;
    let properties = if args.property.is_empty() {
        Property::ALL.to_vec()
    } else {
        args.property
            .iter()
            .map(|p| p.parse::<Property>().map_err(|e| format!("--property: {e}")))
            .collect::<Result<_, _>>()?
    };
    let d = src.def.dim();
    let lower = src
        .kind
        .filter(|k| d > k.min_dim())
        .and_then(|k| generate(k, d - 1).ok());
    let opts = CheckOptions {
        depth: args.depth,
        seed: args.seed,
        lower,
        ..CheckOptions::default()
    };
    let mut all_hold = true;
    for property in properties {
        let reports = run_property(property, &src.def, &opts).map_err(|e| format!("{property}: {e}"))?;
        for report in reports {
            all_hold &= report.verdict == Verdict::Holds;
            writeln!(out, "{}", report.with_subject(src.name.clone())).map_err(|e| e.to_string())?;
        }
    }
    Ok(if all_hold { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Oblique projection for three-dimensional paths.
fn project(point: &[i64]) -> (f64, f64) {
    let x = point[0] as f64;
    let y = point[1] as f64;
    match point.get(2) {
        Some(&z) => (x + 0.35 * z as f64, y + 0.2 * z as f64),
        None => (x, y),
    }
}

fn svg(path: &Path) -> String {
    let points: Vec<(f64, f64)> = path.iter().map(project).collect();
    let half = path.cube_width() as f64 / 2.0;
    let corners: Vec<(f64, f64)> = if path.dim() == 3 {
        [-half, half]
            .iter()
            .flat_map(|&z| [(-half, -half), (half, half)].map(|(x, y)| project(&[x as i64, y as i64, z as i64])))
            .collect()
    } else {
        vec![(-half, -half), (half, half)]
    };
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in points.iter().chain(&corners) {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let cell = path.units() as f64;
    let margin = cell;
    let (w, h) = (x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
    // flip y so that the second axis points up
    let map = |(x, y): (f64, f64)| (x - x0 + margin, y1 - y + margin);
    let stroke = cell / 4.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{:.0}" height="{:.0}">"#,
        w * 512.0 / w.max(h),
        h * 512.0 / w.max(h)
    );
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    if path.dim() == 2 {
        let (ax, ay) = map((-half, half));
        let _ = writeln!(
            s,
            r##"<rect x="{ax}" y="{ay}" width="{0}" height="{0}" fill="none" stroke="#bbb" stroke-width="{1}"/>"##,
            2.0 * half,
            stroke / 2.0
        );
    }
    if points.len() == 1 {
        let (cx, cy) = map(points[0]);
        let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="{}" fill="black"/>"#, stroke * 2.0);
    } else {
        let list: Vec<String> = points
            .iter()
            .map(|&p| {
                let (x, y) = map(p);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="black" stroke-width="{stroke}" stroke-linejoin="round" stroke-linecap="round"/>"#,
            list.join(" ")
        );
    }
    s.push_str("</svg>\n");
    s
}

fn plot(args: &PlotArgs) -> Result<ExitCode, String> {
    let src = load(&args.source)?;
    let d = src.def.dim();
    if !(2..=3).contains(&d) {
        return Err(format!("can only plot 2 or 3 dimensions, not {d}"));
    }
    let path = generate_full_path(&src.def, args.depth, OriginMode::Centre).map_err(|e| e.to_string())?;
    std::fs::write(&args.out, svg(&path)).map_err(|e| format!("{}: {e}", args.out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Describe(a) => describe(a, &mut out),
        Command::Path(a) => path(a, &mut out),
        Command::Check(a) => check(a, &mut out),
        Command::Plot(a) => plot(a),
    };
    let flushed = out.flush();
    match result {
        Ok(code) => match flushed {
            Ok(()) => code,
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => code,
            Err(e) => {
                eprintln!("sfcurves: {e}");
                ExitCode::from(2)
            }
        },
        Err(message) => {
            eprintln!("sfcurves: {message}");
            ExitCode::from(2)
        }
    }
}
