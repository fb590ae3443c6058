//! Expressions in a single variable `t`.
//!
//! Curve coordinates are written in a small infix language:
//!
//! ```text
//! expr  := term (("+"|"-") term)*
//! term  := unary (("*"|"/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" unary)?
//! atom  := NUMBER | "t" | FUNC "(" expr ")" | "(" expr ")"
//! FUNC  := sin | cos | tan | exp | ln | sqrt | abs | atan
//! ```
//!
//! `^` binds tighter than unary minus (`-t^2` is `-(t^2)`) and is right-associative.
//! Exponents must not depend on `t`, which keeps [`Expr::differentiate`] total on
//! parsed input.

mod diff;
mod lexer;
mod parser;
mod simplify;

use std::fmt;
use std::str::FromStr;

pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExprError {
    #[error("unexpected character {character:?} at offset {position}")]
    Lex { position: usize, character: char },
    #[error("invalid number literal {lexeme:?} at offset {position}")]
    BadNumber { position: usize, lexeme: String },
    #[error("parse error at offset {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("cannot evaluate at t = {t}: {reason}")]
    Eval { reason: EvalReason, t: f64 },
    #[error("cannot differentiate: {reason}")]
    Diff { reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalReason {
    DivisionByZero,
    LogOfNonPositive,
    SqrtOfNegative,
    /// Derivative of `abs` requested exactly at its kink.
    AbsKink,
    NonFinite,
}

impl fmt::Display for EvalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalReason::DivisionByZero => "division by zero",
            EvalReason::LogOfNonPositive => "logarithm of a non-positive value",
            EvalReason::SqrtOfNegative => "square root of a negative value",
            EvalReason::AbsKink => "abs is not differentiable at zero",
            EvalReason::NonFinite => "non-finite intermediate value",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
    Atan,
}

impl Func {
    pub const ALL: [Func; 8] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
        Func::Abs,
        Func::Atan,
    ];

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
            Func::Atan => "atan",
        }
    }

    fn apply(self, x: f64) -> Result<f64, EvalReason> {
        match self {
            Func::Ln if x <= 0.0 => Err(EvalReason::LogOfNonPositive),
            Func::Sqrt if x < 0.0 => Err(EvalReason::SqrtOfNegative),
            Func::Sin => Ok(x.sin()),
            Func::Cos => Ok(x.cos()),
            Func::Tan => Ok(x.tan()),
            Func::Exp => Ok(x.exp()),
            Func::Ln => Ok(x.ln()),
            Func::Sqrt => Ok(x.sqrt()),
            Func::Abs => Ok(x.abs()),
            Func::Atan => Ok(x.atan()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Pow => "^",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinaryOp::Add | BinaryOp::Sub => 1,
            BinaryOp::Mul | BinaryOp::Div => 2,
            BinaryOp::Pow => 4,
        }
    }
}

/// Expression tree over the single variable `t`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Neg(Box<Expr>),
    Call(Func, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    /// Sign of the child; only produced by differentiating `abs`, and an
    /// evaluation error where the child is exactly zero.
    Sign(Box<Expr>),
}

impl Expr {
    pub fn constant(v: f64) -> Expr {
        Expr::Const(v)
    }

    pub fn var() -> Expr {
        Expr::Var
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }

    pub fn call(f: Func, e: Expr) -> Expr {
        Expr::Call(f, Box::new(e))
    }

    pub fn binary(op: BinaryOp, l: Expr, r: Expr) -> Expr {
        Expr::Binary(op, Box::new(l), Box::new(r))
    }

    /// Tokenizes and parses `source`.
    pub fn parse(source: &str) -> Result<Expr, ExprError> {
        parse(&tokenize(source)?)
    }

    /// True when the tree mentions `t`.
    pub fn depends_on_t(&self) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Var => true,
            Expr::Neg(e) | Expr::Call(_, e) | Expr::Sign(e) => e.depends_on_t(),
            Expr::Binary(_, l, r) => l.depends_on_t() || r.depends_on_t(),
        }
    }

    pub fn as_const(&self) -> Option<f64> {
        match self {
            Expr::Const(v) => Some(*v),
            _ => None,
        }
    }

    /// Evaluates at `t`. Domain violations and non-finite intermediates are errors.
    pub fn eval(&self, t: f64) -> Result<f64, ExprError> {
        self.eval_inner(t)
            .map_err(|reason| ExprError::Eval { reason, t })
    }

    fn eval_inner(&self, t: f64) -> Result<f64, EvalReason> {
        let v = match self {
            Expr::Const(v) => *v,
            Expr::Var => t,
            Expr::Neg(e) => -e.eval_inner(t)?,
            Expr::Call(f, e) => f.apply(e.eval_inner(t)?)?,
            Expr::Sign(e) => {
                let x = e.eval_inner(t)?;
                if x == 0.0 {
                    return Err(EvalReason::AbsKink);
                }
                x.signum()
            }
            Expr::Binary(op, l, r) => {
                let a = l.eval_inner(t)?;
                let b = r.eval_inner(t)?;
                match op {
                    BinaryOp::Add => a + b,
                    BinaryOp::Sub => a - b,
                    BinaryOp::Mul => a * b,
                    BinaryOp::Div if b == 0.0 => return Err(EvalReason::DivisionByZero),
                    BinaryOp::Div => a / b,
                    BinaryOp::Pow => pow(a, b),
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalReason::NonFinite)
        }
    }

    /// Exact derivative with respect to `t`, simplified.
    pub fn differentiate(&self) -> Result<Expr, ExprError> {
        diff::differentiate(self).map(|d| d.simplify())
    }

    /// Applies value-preserving rewrites: constant folding and the identities
    /// `0*x`, `1*x`, `x+0`, `x-0`, `x/1`, `x^1`, `x^0`, `--x`.
    pub fn simplify(&self) -> Expr {
        simplify::simplify(self)
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var => 1,
            Expr::Neg(e) | Expr::Call(_, e) | Expr::Sign(e) => 1 + e.size(),
            Expr::Binary(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Const(v) if v.is_sign_negative() => 3,
            Expr::Neg(_) => 3,
            Expr::Binary(op, _, _) => op.precedence(),
            _ => 5,
        }
    }
}

// Integer powers go through powi so that negative bases keep working.
fn pow(base: f64, exp: f64) -> f64 {
    if exp.fract() == 0.0 && exp.abs() <= i32::MAX as f64 {
        base.powi(exp as i32)
    } else {
        base.powf(exp)
    }
}

impl FromStr for Expr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Expr::parse(s)
    }
}

struct Paren<'a>(&'a Expr, bool);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Prints in the input grammar with minimal parentheses, so the output re-parses
/// to an equal tree (except for `Sign`, which has no surface syntax).
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(v) => write!(f, "{v}"),
            Expr::Var => f.write_str("t"),
            Expr::Neg(e) => write!(f, "-{}", Paren(e, e.precedence() < 3)),
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
            Expr::Sign(e) => write!(f, "sign({e})"),
            Expr::Binary(op, l, r) => {
                let p = op.precedence();
                let (lp, rp) = match op {
                    BinaryOp::Pow => (l.precedence() <= p, r.precedence() < 3),
                    _ => (l.precedence() < p, r.precedence() <= p),
                };
                write!(f, "{} {} {}", Paren(l, lp), op.symbol(), Paren(r, rp))
            }
        }
    }
}
