#![allow(dead_code)]

use rand::Rng;
use revolve_core::expr::{BinaryOp, Expr, Func};

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        (got - want).abs() / want.abs()
    }
}

/// Random expression tree of depth at most `depth`, without `abs`.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.6) {
            Expr::Var
        } else {
            Expr::Const((rng.gen_range(-3.0..3.0f64) * 4.0).round() / 4.0)
        };
    }
    let child = |rng: &mut R| random_expr(rng, depth - 1);
    match rng.gen_range(0..9) {
        0 => Expr::neg(child(rng)),
        1..=3 => {
            let funcs = [
                Func::Sin,
                Func::Cos,
                Func::Tan,
                Func::Exp,
                Func::Ln,
                Func::Sqrt,
                Func::Atan,
            ];
            let f = funcs[rng.gen_range(0..funcs.len())];
            Expr::call(f, child(rng))
        }
        4 => {
            let exps = [2.0, 3.0, -1.0, 0.5];
            let e = exps[rng.gen_range(0..exps.len())];
            Expr::binary(BinaryOp::Pow, child(rng), Expr::Const(e))
        }
        k => {
            let op = [BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div][k - 5];
            Expr::binary(op, child(rng), child(rng))
        }
    }
}

/// Central difference `(f(t+h) - f(t-h)) / 2h`.
pub fn central_diff(e: &Expr, t: f64, h: f64) -> Option<f64> {
    Some((e.eval(t + h).ok()? - e.eval(t - h).ok()?) / (2.0 * h))
}

/// True when `e` is finite, moderate and not too steep on a small neighbourhood
/// of `t`, i.e. `t` is safely away from poles, branch cuts and overflow.
pub fn well_conditioned(e: &Expr, t: f64) -> bool {
    const STEP: f64 = 2.5e-4;
    let samples: Option<Vec<f64>> = (-4..=4).map(|k| e.eval(t + k as f64 * STEP).ok()).collect();
    let Some(samples) = samples else {
        return false;
    };
    samples.iter().all(|v| v.abs() <= 100.0)
        && samples
            .windows(2)
            .all(|w| ((w[1] - w[0]) / STEP).abs() <= 100.0)
}

/// Polynomial with coefficients in ascending order, evaluated by Horner's rule.
#[derive(Debug, Clone)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn eval(&self, t: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    /// Source text in the expression language.
    pub fn source(&self) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(k, c)| format!("({c})*t^{k}"))
            .collect();
        terms.join("+")
    }

    pub fn random<R: Rng>(rng: &mut R, max_degree: usize) -> Poly {
        let degree = rng.gen_range(1..=max_degree);
        Poly((0..=degree).map(|_| rng.gen_range(-2.0..2.0)).collect())
    }

    /// Shifts the constant term so the polynomial stays at least `floor` on [a, b].
    pub fn lifted_above(mut self, a: f64, b: f64, floor: f64) -> Poly {
        let min = (0..=2000)
            .map(|i| self.eval(a + (b - a) * i as f64 / 2000.0))
            .fold(f64::INFINITY, f64::min);
        self.0[0] += floor - min;
        self
    }
}

/// Composite Gauss-Legendre quadrature, nodes from Newton's method on P_n.
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        Self { nodes, weights }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64, panels: usize) -> f64 {
        let h = (b - a) / panels as f64;
        (0..panels)
            .map(|p| {
                let lo = a + h * p as f64;
                let mid = lo + 0.5 * h;
                self.nodes
                    .iter()
                    .zip(&self.weights)
                    .map(|(x, w)| w * f(mid + 0.5 * h * x))
                    .sum::<f64>()
                    * 0.5
                    * h
            })
            .sum()
    }
}
