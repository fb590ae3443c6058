//! `revolve`: surface areas of revolution from the command line.
//!
//! Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O failure,
//! 5 failed `check`.

mod commands;
mod curve_spec;
mod line_spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::curve_spec::{CurveMode, CurveSpec};
use crate::line_spec::LineSpec;

#[derive(Debug, Parser)]
#[command(
    name = "revolve",
    version,
    about = "Area of a curve revolved about a line Ax + By = C"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Surface area by adaptive quadrature.
    Area(AreaArgs),
    /// CSV of the integrand at uniformly spaced parameters.
    Table(TableArgs),
    /// Write the revolved triangle mesh as OBJ or STL.
    Mesh(MeshArgs),
    /// Compare quadrature against the mesh area.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct CurveChoice {
    /// Parametric curve x(t), y(t).
    #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
    parametric: Option<Vec<String>>,
    /// Graph y = f(x); the variable may be written x or t.
    #[arg(long, value_name = "F", allow_hyphen_values = true)]
    graph: Option<String>,
    /// Graph x = g(y); the variable may be written y or t.
    #[arg(long, value_name = "G", allow_hyphen_values = true)]
    inverse_graph: Option<String>,
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[command(flatten)]
    curve: CurveChoice,
    /// Start of the parameter interval.
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    /// End of the parameter interval.
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    /// Axis of revolution, e.g. "3x+4y=25", "x=0" or "y=2x+1".
    #[arg(long, allow_hyphen_values = true)]
    line: String,
    /// Relative tolerance of the quadrature.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct AreaArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Number of rows, endpoints included.
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..))]
    samples: u32,
}

#[derive(Debug, Args)]
struct MeshResolution {
    /// Samples along the curve.
    #[arg(long, default_value_t = 256)]
    rings: usize,
    /// Samples around the axis.
    #[arg(long, default_value_t = 256)]
    segments: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeshFormat {
    Obj,
    Stl,
}

#[derive(Debug, Args)]
struct MeshArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    resolution: MeshResolution,
    /// Output format; defaults to the extension of --out, else OBJ.
    #[arg(long, value_enum)]
    format: Option<MeshFormat>,
    /// Output file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    resolution: MeshResolution,
}

impl CommonArgs {
    fn specs(&self) -> Result<(CurveSpec, LineSpec), commands::Failure> {
        let mode = match (
            &self.curve.parametric,
            &self.curve.graph,
            &self.curve.inverse_graph,
        ) {
            (Some(xy), _, _) => CurveMode::Parametric {
                x: xy[0].clone(),
                y: xy[1].clone(),
            },
            (_, Some(f), _) => CurveMode::Graph(f.clone()),
            (_, _, Some(g)) => CurveMode::InverseGraph(g.clone()),
            _ => unreachable!("clap requires one curve mode"),
        };
        let curve = CurveSpec {
            mode,
            from: self.from,
            to: self.to,
        };
        let line =
            LineSpec::parse(&self.line).map_err(|e| commands::Failure::Input(e.to_string()))?;
        Ok((curve, line))
    }
}

fn run(cli: Cli) -> Result<(), commands::Failure> {
    match cli.command {
        Command::Area(args) => {
            let c = &args.common;
            let (curve, line) = c.specs()?;
            commands::area(&curve, &line, c.tol, c.json)
        }
        Command::Table(args) => {
            let c = &args.common;
            let (curve, line) = c.specs()?;
            commands::table(&curve, &line, args.samples as usize, c.json)
        }
        Command::Mesh(args) => {
            let c = &args.common;
            let (curve, line) = c.specs()?;
            let stl = match args.format {
                Some(f) => f == MeshFormat::Stl,
                None => args
                    .out
                    .extension()
                    .is_some_and(|e| e.eq_ignore_ascii_case("stl")),
            };
            let r = &args.resolution;
            commands::mesh(&curve, &line, r.rings, r.segments, stl, &args.out, c.json)
        }
        Command::Check(args) => {
            let c = &args.common;
            let (curve, line) = c.specs()?;
            let r = &args.resolution;
            commands::check(&curve, &line, c.tol, r.rings, r.segments, c.json)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if let Some(message) = failure.message() {
                eprintln!("revolve: {message}");
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
