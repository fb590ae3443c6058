//! Adaptive Gauss-Kronrod integration and sign-change location.
//!
//! [`integrate`] applies the 7-point Gauss / 15-point Kronrod pair to the whole
//! interval, then repeatedly bisects the subinterval with the largest error
//! estimate until the summed estimate meets the tolerance. Error estimates are
//! rescaled as in QUADPACK's `qk15`, which makes them conservative for smooth
//! integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::expr::{EvalReason, ExprError};
use crate::Error;

pub const DEFAULT_REL_TOL: f64 = 1e-10;
pub const DEFAULT_ABS_TOL: f64 = 1e-12;
/// Deepest bisection level allowed for any subinterval.
pub const MAX_DEPTH: u32 = 60;
/// Number of grid cells scanned by [`find_sign_changes`] in the area pipeline.
pub const DEFAULT_GRID_SIZE: usize = 1024;
/// Hard cap on live subintervals, reached only by pathological integrands.
const MAX_INTERVALS: usize = 1 << 16;

/// Nonnegative Kronrod abscissae on [-1, 1], largest first; the odd entries are
/// the Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

pub const KRONROD_POINTS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute error estimate, never negative.
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// One application of the 15-point rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KronrodEstimate {
    pub value: f64,
    pub error: f64,
    /// Integral of `|f|` under the same rule; sets the roundoff floor.
    pub abs_value: f64,
}

fn checked<F>(f: &F, t: f64) -> Result<f64, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    let v = f(t)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(ExprError::Eval {
            reason: EvalReason::NonFinite,
            t,
        }
        .into())
    }
}

/// Gauss-Kronrod 7/15 on `[a, b]`.
pub fn kronrod15<F>(f: &F, a: f64, b: f64) -> Result<KronrodEstimate, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = checked(f, center)?;

    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut abs_sum = kronrod.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let lo = checked(f, center - dx)?;
        let hi = checked(f, center + dx)?;
        fv1[j] = lo;
        fv2[j] = hi;
        kronrod += WGK[j] * (lo + hi);
        abs_sum += WGK[j] * (lo.abs() + hi.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (lo + hi);
        }
    }

    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let scale = half.abs();
    Ok(KronrodEstimate {
        value: kronrod * half,
        error: rescale_error((kronrod - gauss) * half, abs_sum * scale, asc * scale),
        abs_value: abs_sum * scale,
    })
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = err.abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    depth: u32,
    est: KronrodEstimate,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Largest error first; ties go to the leftmost piece so the order is total.
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.est
            .error
            .total_cmp(&other.est.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn check_tolerance(tol: f64) -> Result<(), Error> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Tolerance(tol))
    }
}

/// Integrates `f` over `[a, b]` until the error estimate is at most
/// `max(abs_tol, rel_tol * |value|)`.
///
/// Stops early, returning the current estimate, when the remaining error is at
/// the level of floating-point roundoff. Fails with [`Error::MaxSubdivisions`]
/// when a piece would need more than [`MAX_DEPTH`] bisections.
pub fn integrate<F>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadratureResult, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    check_tolerance(rel_tol)?;
    check_tolerance(abs_tol)?;
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(Error::BadInterval { t0: a, t1: b });
    }

    let first = kronrod15(&f, a, b)?;
    let mut evaluations = KRONROD_POINTS;
    let mut value = first.value;
    let mut error = first.error;
    let mut abs_value = first.abs_value;
    let mut heap = BinaryHeap::new();
    heap.push(Piece {
        a,
        b,
        depth: 0,
        est: first,
    });

    loop {
        let target = abs_tol.max(rel_tol * value.abs());
        if error <= target || error <= 100.0 * f64::EPSILON * abs_value {
            break;
        }
        let worst = heap.pop().expect("heap holds at least one piece");
        let mid = 0.5 * (worst.a + worst.b);
        let unsplittable = mid <= worst.a || mid >= worst.b;
        if worst.depth >= MAX_DEPTH || unsplittable || heap.len() + 2 > MAX_INTERVALS {
            return Err(Error::MaxSubdivisions {
                a: worst.a,
                b: worst.b,
                depth: worst.depth,
            });
        }
        let left = kronrod15(&f, worst.a, mid)?;
        let right = kronrod15(&f, mid, worst.b)?;
        evaluations += 2 * KRONROD_POINTS;

        value += left.value + right.value - worst.est.value;
        error += left.error + right.error - worst.est.error;
        abs_value += left.abs_value + right.abs_value - worst.est.abs_value;

        for (lo, hi, est) in [(worst.a, mid, left), (mid, worst.b, right)] {
            heap.push(Piece {
                a: lo,
                b: hi,
                depth: worst.depth + 1,
                est,
            });
        }
    }

    // Re-sum in ascending order of position so the result does not depend on
    // the order in which pieces were refined.
    let mut pieces = heap.into_vec();
    pieces.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = pieces.iter().map(|p| p.est.value).sum();
    let error_estimate = pieces.iter().map(|p| p.est.error).sum();

    Ok(QuadratureResult {
        value,
        error_estimate,
        evaluations,
    })
}

/// Locates strict sign changes of `g` on `[a, b]`.
///
/// `g` is sampled on `grid_size` equal cells. Whenever two consecutive nonzero
/// samples have opposite signs, the root between them is refined by bisection
/// to a bracket no wider than `1e-13 * (1 + |a| + |b|)`. Zeros where `g` touches
/// the axis without changing sign are not reported, nor are pairs of crossings
/// inside a single cell.
pub fn find_sign_changes<G>(g: G, a: f64, b: f64, grid_size: usize) -> Result<Vec<f64>, Error>
where
    G: Fn(f64) -> Result<f64, Error>,
{
    if grid_size < 2 {
        return Err(Error::GridSize(grid_size));
    }
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(Error::BadInterval { t0: a, t1: b });
    }
    let tol = 1e-13 * (1.0 + a.abs() + b.abs());
    let mut roots = Vec::new();
    let mut last: Option<(f64, f64)> = None;

    for t in crate::curve::uniform_grid(a, b, grid_size + 1) {
        let v = g(t)?;
        if v == 0.0 || v.is_nan() {
            continue;
        }
        if let Some((lo, g_lo)) = last {
            if (g_lo < 0.0) != (v < 0.0) {
                roots.push(bisect(&g, lo, t, g_lo, tol)?);
            }
        }
        last = Some((t, v));
    }
    Ok(roots)
}

fn bisect<G>(g: &G, mut lo: f64, mut hi: f64, g_lo: f64, tol: f64) -> Result<f64, Error>
where
    G: Fn(f64) -> Result<f64, Error>,
{
    let lo_negative = g_lo < 0.0;
    while hi - lo > tol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = g(mid)?;
        if v == 0.0 {
            return Ok(mid);
        }
        if (v < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + 0.5 * (hi - lo))
}
