//! Surface area of a curve revolved about a line.
//!
//! For a curve `(x(t), y(t))`, `t0 <= t <= t1`, and a line `Ax + By = C`, the area is
//!
//! ```text
//! 2π ∫ r(t) sqrt(x'(t)^2 + y'(t)^2) dt,    r(t) = |A x(t) + B y(t) - C| / sqrt(A^2 + B^2)
//! ```
//!
//! `r` has a kink wherever the curve crosses the line, so the interval is cut at
//! every strict sign change of `A x(t) + B y(t) - C` and each piece is integrated
//! separately. A curve that crosses the line sweeps both sides; both sweeps count.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::curve::ParametricCurve;
use crate::geometry::Line;
use crate::quadrature::{self, DEFAULT_ABS_TOL, DEFAULT_GRID_SIZE, DEFAULT_REL_TOL};
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct AreaResult {
    pub area: f64,
    /// Sum of the per-segment quadrature error estimates.
    pub error_estimate: f64,
    /// Parameters where the curve crosses the line, ascending, inside `(t0, t1)`.
    pub crossings: Vec<f64>,
    /// Number of smooth pieces integrated, `crossings.len() + 1`.
    pub segments: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Cells scanned when looking for crossings.
    pub grid_size: usize,
}

impl Default for AreaOptions {
    fn default() -> Self {
        Self {
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: DEFAULT_ABS_TOL,
            grid_size: DEFAULT_GRID_SIZE,
        }
    }
}

impl AreaOptions {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }
}

/// `2π r(t) |c'(t)|`: the area swept per unit parameter at `t`.
pub fn area_integrand(curve: &ParametricCurve, line: &Line, t: f64) -> Result<f64, Error> {
    let p = curve.point(t)?;
    Ok(TAU * line.distance(p) * curve.arc_speed(t)?)
}

pub fn surface_area(
    curve: &ParametricCurve,
    line: &Line,
    rel_tol: f64,
) -> Result<AreaResult, Error> {
    surface_area_with(curve, line, &AreaOptions::with_rel_tol(rel_tol))
}

pub fn surface_area_with(
    curve: &ParametricCurve,
    line: &Line,
    options: &AreaOptions,
) -> Result<AreaResult, Error> {
    integrate_split(
        curve,
        |t| Ok(line.residual(curve.point(t)?)),
        |t| area_integrand(curve, line, t),
        options,
    )
}

pub fn surface_area_x_axis(curve: &ParametricCurve, rel_tol: f64) -> Result<AreaResult, Error> {
    surface_area(curve, &Line::x_axis(), rel_tol)
}

pub fn surface_area_y_axis(curve: &ParametricCurve, rel_tol: f64) -> Result<AreaResult, Error> {
    surface_area(curve, &Line::y_axis(), rel_tol)
}

/// Area swept by the graph of `y = f(t)`, `a <= t <= b`, about `y = m t + k`.
///
/// Integrates `2π |f(t) - m t - k| sqrt((1 + f'(t)^2) / (1 + m^2))` directly rather
/// than going through the general line form.
pub fn surface_area_graph_slant(
    f_source: &str,
    a: f64,
    b: f64,
    m: f64,
    k: f64,
    rel_tol: f64,
) -> Result<AreaResult, Error> {
    let curve = ParametricCurve::graph(f_source, a, b)?;
    // validates m and k
    Line::from_slope(m, k)?;
    let (f, df) = (curve.y(), curve.dy());
    let gap = |t: f64| -> Result<f64, Error> { Ok(f.eval(t)? - m * t - k) };
    integrate_split(
        &curve,
        gap,
        |t| {
            let slope = df.eval(t)?;
            Ok(TAU * gap(t)?.abs() * ((1.0 + slope * slope) / (1.0 + m * m)).sqrt())
        },
        &AreaOptions::with_rel_tol(rel_tol),
    )
}

fn integrate_split<G, F>(
    curve: &ParametricCurve,
    side: G,
    integrand: F,
    options: &AreaOptions,
) -> Result<AreaResult, Error>
where
    G: Fn(f64) -> Result<f64, Error>,
    F: Fn(f64) -> Result<f64, Error> + Sync,
{
    let (t0, t1) = (curve.t0(), curve.t1());
    let crossings = quadrature::find_sign_changes(side, t0, t1, options.grid_size)?;

    let mut breaks = Vec::with_capacity(crossings.len() + 2);
    breaks.push(t0);
    breaks.extend_from_slice(&crossings);
    breaks.push(t1);

    let pieces = breaks
        .par_windows(2)
        .enumerate()
        .map(|(index, w)| {
            quadrature::integrate(&integrand, w[0], w[1], options.rel_tol, options.abs_tol).map_err(
                |e| match e {
                    Error::MaxSubdivisions { .. } => Error::Segment {
                        index,
                        start: w[0],
                        end: w[1],
                        source: Box::new(e),
                    },
                    other => other,
                },
            )
        })
        .collect::<Result<Vec<_>, _>>()?;

    // ascending t, independent of scheduling
    let area = pieces.iter().map(|p| p.value).sum::<f64>().max(0.0);
    let error_estimate = pieces.iter().map(|p| p.error_estimate).sum();

    Ok(AreaResult {
        area,
        error_estimate,
        segments: pieces.len(),
        crossings,
    })
}
