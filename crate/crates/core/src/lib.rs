//! Areas of surfaces swept by revolving a parametric plane curve about an
//! arbitrary line `Ax + By = C`.
//!
//! The area is `2π ∫ r(t) |c'(t)| dt`, where `r(t)` is the distance from the curve
//! point to the line. [`area::surface_area`] evaluates it with adaptive
//! Gauss-Kronrod quadrature after splitting the parameter interval wherever the
//! curve crosses the line, so every piece has a smooth integrand.
//! [`mesh::revolve_mesh`] builds the swept surface explicitly; the summed
//! triangle area is an independent check on the quadrature.
//!
//! ```
//! use revolve_core::{surface_area, Line, ParametricCurve};
//!
//! // unit circle about 3x + 4y = 25: a torus with R = 5, r = 1
//! let circle = ParametricCurve::parse("cos(t)", "sin(t)", 0.0, std::f64::consts::TAU)?;
//! let line = Line::new(3.0, 4.0, 25.0)?;
//! let result = surface_area(&circle, &line, 1e-10)?;
//! let exact = 4.0 * std::f64::consts::PI.powi(2) * 5.0;
//! assert!((result.area - exact).abs() < 1e-8 * exact);
//! # Ok::<(), revolve_core::Error>(())
//! ```

pub mod area;
pub mod curve;
mod error;
pub mod expr;
pub mod geometry;
pub mod mesh;
pub mod quadrature;

pub use area::{
    area_integrand, surface_area, surface_area_graph_slant, surface_area_with, surface_area_x_axis,
    surface_area_y_axis, AreaOptions, AreaResult,
};
pub use curve::ParametricCurve;
pub use error::Error;
pub use expr::{Expr, ExprError};
pub use geometry::{Decomposition, Frame, Line, Point2};
pub use mesh::{mesh_area, revolve_mesh, revolve_point, Mesh, Point3};
pub use quadrature::{find_sign_changes, integrate, QuadratureResult};
