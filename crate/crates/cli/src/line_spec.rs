//! Parser for the `--line` argument.
//!
//! Accepted forms are linear equations in `x` and `y` such as `3x+4y=25`,
//! `x = 0`, `2y=7`, `3*x - 4*y = 0`, and the slope form `y = 2x + 1`.

use std::fmt;

use revolve_core::Line;

#[derive(Debug, Clone, PartialEq)]
pub struct LineSpec {
    pub raw: String,
    pub line: Line,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineSpecError {
    pub raw: String,
    pub reason: String,
}

impl fmt::Display for LineSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid line {:?}: {}", self.raw, self.reason)
    }
}

impl std::error::Error for LineSpecError {}

/// Coefficients of `a x + b y + c` on one side of the equation.
#[derive(Debug, Default, Clone, Copy, PartialEq)]
struct Side {
    a: f64,
    b: f64,
    c: f64,
    has_y: bool,
    only_y: bool,
}

impl LineSpec {
    pub fn parse(raw: &str) -> Result<LineSpec, LineSpecError> {
        let fail = |reason: String| LineSpecError {
            raw: raw.to_string(),
            reason,
        };
        let compact: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let Some((lhs, rhs)) = compact.split_once('=') else {
            return Err(fail("expected exactly one '='".into()));
        };
        if rhs.contains('=') {
            return Err(fail("expected exactly one '='".into()));
        }
        let left = parse_side(lhs).map_err(&fail)?;
        let right = parse_side(rhs).map_err(&fail)?;

        let line = if left.only_y && !right.has_y {
            Line::from_slope(right.a, right.c)
        } else {
            Line::new(left.a - right.a, left.b - right.b, right.c - left.c)
        };
        line.map(|line| LineSpec {
            raw: raw.to_string(),
            line,
        })
        .map_err(|e| fail(e.to_string()))
    }
}

fn parse_side(s: &str) -> Result<Side, String> {
    if s.is_empty() {
        return Err("empty side of the equation".into());
    }
    let chars: Vec<char> = s.chars().collect();
    let mut side = Side::default();
    let mut terms = 0;
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1.0;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1.0;
            }
            i += 1;
        } else if terms > 0 {
            return Err(format!(
                "expected '+' or '-' at {:?}",
                chars[i..].iter().collect::<String>()
            ));
        }

        let start = i;
        i = scan_number(&chars, i);
        let number: Option<f64> = if i > start {
            let text: String = chars[start..i].iter().collect();
            Some(text.parse().map_err(|_| format!("bad number {text:?}"))?)
        } else {
            None
        };
        if number.is_some() && chars.get(i) == Some(&'*') {
            i += 1;
            if !matches!(chars.get(i), Some('x' | 'y')) {
                return Err("expected x or y after '*'".into());
            }
        }
        let coef = sign * number.unwrap_or(1.0);
        match chars.get(i) {
            Some('x') => {
                side.a += coef;
                i += 1;
            }
            Some('y') => {
                side.b += coef;
                side.has_y = true;
                side.only_y = terms == 0 && number.is_none() && sign > 0.0;
                i += 1;
            }
            _ if number.is_some() => side.c += coef,
            Some(other) => return Err(format!("unexpected character {other:?}")),
            None => return Err("dangling sign".into()),
        }
        if !coef.is_finite() {
            return Err("coefficients must be finite".into());
        }
        terms += 1;
        if side.has_y && terms > 1 {
            side.only_y = false;
        }
    }
    Ok(side)
}

/// Index just past a decimal literal `d+(.d*)?([eE][+-]?d+)?` starting at `i`.
fn scan_number(chars: &[char], mut i: usize) -> usize {
    let digits = |i: &mut usize| {
        let s = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        *i > s
    };
    let start = i;
    let int = digits(&mut i);
    if i < chars.len() && chars[i] == '.' {
        i += 1;
        let frac = digits(&mut i);
        if !int && !frac {
            return start;
        }
    } else if !int {
        return start;
    }
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        if digits(&mut j) {
            i = j;
        }
    }
    i
}
