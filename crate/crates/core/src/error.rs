use crate::expr::ExprError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("degenerate line: A = B = 0 (C = {c})")]
    DegenerateLine { c: f64 },
    #[error("line coefficients must be finite, got ({a}, {b}, {c})")]
    NonFiniteLine { a: f64, b: f64, c: f64 },
    #[error("bad interval [{t0}, {t1}]: the start must be finite and below the end")]
    BadInterval { t0: f64, t1: f64 },
    #[error("t = {t} is outside the curve domain [{t0}, {t1}]")]
    OutOfDomain { t: f64, t0: f64, t1: f64 },
    #[error("adaptive quadrature did not converge; gave up at subdivision depth {depth} near [{a}, {b}]")]
    MaxSubdivisions { a: f64, b: f64, depth: u32 },
    #[error("segment {index} [{start}, {end}] failed to integrate: {source}")]
    Segment {
        index: usize,
        start: f64,
        end: f64,
        source: Box<Error>,
    },
    #[error("mesh needs rings >= 2 and segments >= 3, got {rings} x {segments}")]
    MeshResolution { rings: usize, segments: usize },
    #[error("invalid tolerance {0}: must be positive and finite")]
    Tolerance(f64),
    #[error("sign-change grid needs at least 2 cells, got {0}")]
    GridSize(usize),
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),
}

impl Error {
    /// Quadrature gave up, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::MaxSubdivisions { .. } => true,
            Error::Segment { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}
