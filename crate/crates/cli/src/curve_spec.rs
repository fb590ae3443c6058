//! Curve selection from the command line.

use revolve_core::expr::{tokenize, TokenKind};
use revolve_core::{Error, ParametricCurve};

#[derive(Debug, Clone, PartialEq)]
pub enum CurveMode {
    Parametric {
        x: String,
        y: String,
    },
    /// `y = f(x)`; `x` and `t` both name the parameter.
    Graph(String),
    /// `x = g(y)`; `y` and `t` both name the parameter.
    InverseGraph(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub mode: CurveMode,
    pub from: f64,
    pub to: f64,
}

impl CurveSpec {
    pub fn build(&self) -> Result<ParametricCurve, Error> {
        match &self.mode {
            CurveMode::Parametric { x, y } => ParametricCurve::parse(x, y, self.from, self.to),
            CurveMode::Graph(f) => {
                ParametricCurve::graph(&rename_variable(f, "x"), self.from, self.to)
            }
            CurveMode::InverseGraph(g) => {
                ParametricCurve::inverse_graph(&rename_variable(g, "y"), self.from, self.to)
            }
        }
    }
}

/// Replaces the identifier `name` with `t`, leaving longer identifiers such as
/// `exp` untouched. Both names are one character, so error positions still
/// point into the user's text.
pub fn rename_variable(source: &str, name: &str) -> String {
    let Ok(tokens) = tokenize(source) else {
        // the parser will report the lexical error against the original text
        return source.to_string();
    };
    let mut chars: Vec<char> = source.chars().collect();
    for tok in tokens {
        if tok.kind == TokenKind::Identifier && tok.lexeme == name {
            chars[tok.position] = 't';
        }
    }
    chars.into_iter().collect()
}
