//! Parametric plane curves `t -> (x(t), y(t))` on a closed interval.

use crate::expr::Expr;
use crate::geometry::Point2;
use crate::Error;

/// A curve together with the symbolic derivatives of both coordinates.
///
/// The derivatives are computed once at construction; [`arc_speed`](Self::arc_speed)
/// is evaluated many thousands of times by the quadrature.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametricCurve {
    x: Expr,
    y: Expr,
    dx: Expr,
    dy: Expr,
    t0: f64,
    t1: f64,
}

impl ParametricCurve {
    pub fn new(x: Expr, y: Expr, t0: f64, t1: f64) -> Result<Self, Error> {
        if !(t0.is_finite() && t1.is_finite() && t0 < t1) {
            return Err(Error::BadInterval { t0, t1 });
        }
        let dx = x.differentiate()?;
        let dy = y.differentiate()?;
        Ok(Self {
            x,
            y,
            dx,
            dy,
            t0,
            t1,
        })
    }

    pub fn parse(x_source: &str, y_source: &str, t0: f64, t1: f64) -> Result<Self, Error> {
        Self::new(Expr::parse(x_source)?, Expr::parse(y_source)?, t0, t1)
    }

    /// Graph of `y = f(t)` for `t` in `[a, b]`.
    pub fn graph(f_source: &str, a: f64, b: f64) -> Result<Self, Error> {
        Self::new(Expr::Var, Expr::parse(f_source)?, a, b)
    }

    /// Graph of `x = g(t)` for `t` in `[c, d]`.
    pub fn inverse_graph(g_source: &str, c: f64, d: f64) -> Result<Self, Error> {
        Self::new(Expr::parse(g_source)?, Expr::Var, c, d)
    }

    pub fn x(&self) -> &Expr {
        &self.x
    }

    pub fn y(&self) -> &Expr {
        &self.y
    }

    pub fn dx(&self) -> &Expr {
        &self.dx
    }

    pub fn dy(&self) -> &Expr {
        &self.dy
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn t1(&self) -> f64 {
        self.t1
    }

    pub fn contains(&self, t: f64) -> bool {
        self.t0 <= t && t <= self.t1
    }

    fn check(&self, t: f64) -> Result<(), Error> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                t,
                t0: self.t0,
                t1: self.t1,
            })
        }
    }

    pub fn point(&self, t: f64) -> Result<Point2, Error> {
        self.check(t)?;
        Ok(Point2::new(self.x.eval(t)?, self.y.eval(t)?))
    }

    /// Velocity `(x'(t), y'(t))`.
    pub fn velocity(&self, t: f64) -> Result<Point2, Error> {
        self.check(t)?;
        Ok(Point2::new(self.dx.eval(t)?, self.dy.eval(t)?))
    }

    /// `sqrt(x'(t)^2 + y'(t)^2)`, the arc length per unit parameter.
    pub fn arc_speed(&self, t: f64) -> Result<f64, Error> {
        Ok(self.velocity(t)?.norm())
    }

    /// `count` equally spaced parameters from `t0` to `t1`; the last is exactly `t1`.
    pub fn uniform_parameters(&self, count: usize) -> Vec<f64> {
        uniform_grid(self.t0, self.t1, count)
    }
}

pub(crate) fn uniform_grid(a: f64, b: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let last = count - 1;
            (0..count)
                .map(|i| {
                    if i == last {
                        b
                    } else {
                        a + (b - a) * (i as f64 / last as f64)
                    }
                })
                .collect()
        }
    }
}

pub fn make_curve(
    x_source: &str,
    y_source: &str,
    t0: f64,
    t1: f64,
) -> Result<ParametricCurve, Error> {
    ParametricCurve::parse(x_source, y_source, t0, t1)
}

pub fn from_graph(f_source: &str, a: f64, b: f64) -> Result<ParametricCurve, Error> {
    ParametricCurve::graph(f_source, a, b)
}

pub fn from_inverse_graph(g_source: &str, c: f64, d: f64) -> Result<ParametricCurve, Error> {
    ParametricCurve::inverse_graph(g_source, c, d)
}

pub fn eval_point(curve: &ParametricCurve, t: f64) -> Result<Point2, Error> {
    curve.point(t)
}

pub fn arc_speed(curve: &ParametricCurve, t: f64) -> Result<f64, Error> {
    curve.arc_speed(t)
}
