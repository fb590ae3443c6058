//! The four subcommands. Results go to standard output; diagnostics are
//! returned as a [`Failure`] for `main` to report on standard error.

use std::f64::consts::TAU;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use revolve_core::mesh::{export_obj, export_stl};
use revolve_core::{mesh_area, revolve_mesh, surface_area, Error, Line, ParametricCurve};
use serde::Serialize;

use crate::curve_spec::CurveSpec;
use crate::line_spec::LineSpec;

/// Minimum relative agreement `check` always accepts.
const CHECK_FLOOR: f64 = 0.002;

#[derive(Debug)]
pub enum Failure {
    /// Malformed or unusable input.
    Input(String),
    /// The quadrature gave up.
    Numerical(String),
    Io(String),
    /// `check` ran but the two areas disagree; the report is already printed.
    CheckFailed,
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Numerical(_) => 3,
            Failure::Io(_) => 4,
            Failure::CheckFailed => 5,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Failure::Input(m) | Failure::Numerical(m) | Failure::Io(m) => Some(m),
            Failure::CheckFailed => None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Shortest decimal that reads back to the same `f64`, switching to
/// exponent notation for very small or very large magnitudes.
pub fn number(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && a.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

fn list(values: &[f64]) -> String {
    let items: Vec<String> = values.iter().map(|&v| number(v)).collect();
    format!("[{}]", items.join(", "))
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    println!("{text}");
    Ok(())
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct AreaReport {
    area: f64,
    error_estimate: f64,
    crossings: Vec<f64>,
    segments: usize,
}

pub fn area(curve: &CurveSpec, line: &LineSpec, tol: f64, json: bool) -> Result<(), Failure> {
    let r = surface_area(&curve.build()?, &line.line, tol)?;
    let report = AreaReport {
        area: r.area,
        error_estimate: r.error_estimate,
        crossings: r.crossings,
        segments: r.segments,
    };
    if json {
        return print_json(&report);
    }
    println!("area: {}", number(report.area));
    println!("errorEstimate: {}", number(report.error_estimate));
    println!("crossings: {}", list(&report.crossings));
    println!("segments: {}", report.segments);
    Ok(())
}

#[derive(Debug, Serialize)]
struct Row {
    t: f64,
    x: f64,
    y: f64,
    r: f64,
    arc_speed: f64,
    integrand: f64,
}

fn row(curve: &ParametricCurve, line: &Line, t: f64) -> Result<Row, Error> {
    let p = curve.point(t)?;
    let r = line.distance(p);
    let arc_speed = curve.arc_speed(t)?;
    Ok(Row {
        t,
        x: p.x,
        y: p.y,
        r,
        arc_speed,
        integrand: TAU * r * arc_speed,
    })
}

pub fn table(
    curve: &CurveSpec,
    line: &LineSpec,
    samples: usize,
    json: bool,
) -> Result<(), Failure> {
    let c = curve.build()?;
    let rows = c
        .uniform_parameters(samples)
        .into_iter()
        .map(|t| row(&c, &line.line, t))
        .collect::<Result<Vec<_>, _>>()?;
    if json {
        return print_json(&rows);
    }
    let mut out = BufWriter::new(io::stdout().lock());
    writeln!(out, "t,x,y,r,arc_speed,integrand")?;
    for r in rows {
        let cells = [r.t, r.x, r.y, r.r, r.arc_speed, r.integrand].map(number);
        writeln!(out, "{}", cells.join(","))?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct MeshReport {
    mesh_area: f64,
    vertices: usize,
    triangles: usize,
}

pub fn mesh(
    curve: &CurveSpec,
    line: &LineSpec,
    rings: usize,
    segments: usize,
    stl: bool,
    out: &Path,
    json: bool,
) -> Result<(), Failure> {
    let m = revolve_mesh(&curve.build()?, &line.line, rings, segments)?;
    let io_failure = |e: io::Error| Failure::Io(format!("{}: {e}", out.display()));
    let mut sink = BufWriter::new(File::create(out).map_err(io_failure)?);
    if stl {
        export_stl(&m, &mut sink).map_err(io_failure)?;
    } else {
        export_obj(&m, &mut sink).map_err(io_failure)?;
    }
    sink.flush().map_err(io_failure)?;

    let report = MeshReport {
        mesh_area: mesh_area(&m),
        vertices: m.vertices.len(),
        triangles: m.triangles.len(),
    };
    if json {
        return print_json(&report);
    }
    println!("meshArea: {}", number(report.mesh_area));
    Ok(())
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckReport {
    quadrature_area: f64,
    mesh_area: f64,
    relative_difference: f64,
    /// Estimated relative discretization error of the mesh, from a half-resolution run.
    mesh_allowance: f64,
    threshold: f64,
    pass: bool,
}

fn relative(a: f64, reference: f64) -> f64 {
    if a == reference {
        0.0
    } else {
        (a - reference).abs() / reference.abs()
    }
}

pub fn check(
    curve: &CurveSpec,
    line: &LineSpec,
    tol: f64,
    rings: usize,
    segments: usize,
    json: bool,
) -> Result<(), Failure> {
    let c = curve.build()?;
    let l = &line.line;
    let quadrature_area = surface_area(&c, l, tol)?.area;
    let mesh_area_full = mesh_area(&revolve_mesh(&c, l, rings, segments)?);
    let coarse = mesh_area(&revolve_mesh(
        &c,
        l,
        rings.div_ceil(2).max(2),
        (segments / 2).max(3),
    )?);
    // second-order convergence: the fine mesh is off by about a third of the
    // fine-coarse gap; doubled for safety
    let mesh_allowance = 2.0 * (mesh_area_full - coarse).abs() / (3.0 * quadrature_area.abs());
    let mesh_allowance = if mesh_allowance.is_finite() {
        mesh_allowance
    } else {
        0.0
    };
    let relative_difference = relative(mesh_area_full, quadrature_area);
    let threshold = CHECK_FLOOR.max(mesh_allowance);
    let report = CheckReport {
        quadrature_area,
        mesh_area: mesh_area_full,
        relative_difference,
        mesh_allowance,
        threshold,
        pass: relative_difference <= threshold,
    };
    if json {
        print_json(&report)?;
    } else {
        println!("quadratureArea: {}", number(report.quadrature_area));
        println!("meshArea: {}", number(report.mesh_area));
        println!("relativeDifference: {}", number(report.relative_difference));
        println!("meshAllowance: {}", number(report.mesh_allowance));
        println!("threshold: {}", number(report.threshold));
        println!("result: {}", if report.pass { "pass" } else { "fail" });
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::CheckFailed)
    }
}
