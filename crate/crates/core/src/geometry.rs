//! Lines `Ax + By = C` in the plane and the orthonormal frame attached to them.
//!
//! Every line carries a frame `(O, u, v)`: `O` is the point of the line closest to
//! the origin, `u` runs along the line and `v` is its unit normal. Any point splits
//! into a part on the line (`O + along * u`) and a perpendicular part
//! (`signed_offset * v`), and its distance to the line is `|signed_offset|`.
//!
//! Coefficients are kept as given. `(0, 2, 6)` and `(0, 1, 3)` are the same line,
//! but `(0, -1, -3)` has `u` and `v` flipped, and signed offsets flip with them.

use std::ops::{Add, Mul, Neg, Sub};

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    fn mul(self, rhs: Point2) -> Point2 {
        Point2::new(self * rhs.x, self * rhs.y)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// The line `a*x + b*y = c`, with `a` and `b` not both zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    a: f64,
    b: f64,
    c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Line, Error> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::NonFiniteLine { a, b, c });
        }
        if a == 0.0 && b == 0.0 {
            return Err(Error::DegenerateLine { c });
        }
        Ok(Line { a, b, c })
    }

    /// `y = m*x + k`, stored as `(-m, 1, k)`.
    pub fn from_slope(m: f64, k: f64) -> Result<Line, Error> {
        Line::new(-m, 1.0, k)
    }

    pub fn x_axis() -> Line {
        Line {
            a: 0.0,
            b: 1.0,
            c: 0.0,
        }
    }

    pub fn y_axis() -> Line {
        Line {
            a: 1.0,
            b: 0.0,
            c: 0.0,
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn coefficients(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    /// `sqrt(a^2 + b^2)`, computed without intermediate overflow.
    pub fn normal_length(&self) -> f64 {
        self.a.hypot(self.b)
    }

    /// `a*x + b*y - c`: zero on the line, with the sign telling the side.
    pub fn residual(&self, p: Point2) -> f64 {
        self.a * p.x + self.b * p.y - self.c
    }

    pub fn frame(&self) -> Frame {
        let n2 = self.a * self.a + self.b * self.b;
        let n = self.normal_length();
        Frame {
            origin: Point2::new(self.a * self.c / n2, self.b * self.c / n2),
            tangent: Point2::new(-self.b / n, self.a / n),
            normal: Point2::new(self.a / n, self.b / n),
        }
    }

    pub fn decompose(&self, p: Point2) -> Decomposition {
        let frame = self.frame();
        let n = self.normal_length();
        let along = (-self.b * p.x + self.a * p.y) / n;
        let signed_offset = self.residual(p) / n;
        Decomposition {
            along,
            signed_offset,
            foot: frame.origin + along * frame.tangent,
        }
    }

    /// Perpendicular distance from `p` to the line.
    pub fn distance(&self, p: Point2) -> f64 {
        self.residual(p).abs() / self.normal_length()
    }

    /// Same line with all coefficients multiplied by `lambda` (nonzero).
    pub fn scaled(&self, lambda: f64) -> Result<Line, Error> {
        Line::new(lambda * self.a, lambda * self.b, lambda * self.c)
    }
}

/// Origin on the line plus unit tangent and unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub origin: Point2,
    pub tangent: Point2,
    pub normal: Point2,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    /// Coordinate along the tangent, measured from the frame origin.
    pub along: f64,
    /// Coordinate along the normal; its magnitude is the distance to the line.
    pub signed_offset: f64,
    /// Orthogonal projection onto the line.
    pub foot: Point2,
}

impl Decomposition {
    /// `foot + signed_offset * normal`, which gives back the decomposed point.
    pub fn reconstruct(&self, frame: &Frame) -> Point2 {
        self.foot + self.signed_offset * frame.normal
    }
}

pub fn make_line(a: f64, b: f64, c: f64) -> Result<Line, Error> {
    Line::new(a, b, c)
}

pub fn line_from_slope(m: f64, k: f64) -> Result<Line, Error> {
    Line::from_slope(m, k)
}

pub fn frame_of(line: &Line) -> Frame {
    line.frame()
}

pub fn decompose(p: Point2, line: &Line) -> Decomposition {
    line.decompose(p)
}

pub fn distance_to_line(p: Point2, line: &Line) -> f64 {
    line.distance(p)
}
