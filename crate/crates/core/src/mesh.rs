//! Explicit triangle meshes of revolved curves, and OBJ/STL export.
//!
//! The curve's plane is embedded at `z = 0`. A point with decomposition
//! `foot + s * v` relative to the axis line is carried around the circle
//! `foot + s * (cos θ * v + sin θ * e_z)`. The signed offset `s` is used as is, so
//! the two sides of a crossing sweep the same circles in opposite phase.

use std::f64::consts::TAU;
use std::io::{self, Write};
use std::ops::Sub;

use rayon::prelude::*;

use crate::curve::ParametricCurve;
use crate::geometry::{Line, Point2};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn cross(self, o: Point3) -> Point3 {
        Point3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn dot(self, o: Point3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

/// Indexed triangle mesh.
///
/// Meshes from [`revolve_mesh`] are ring-major: vertex `i * segments + j` is
/// sample `i` along the curve at angle `j`. Hand-built meshes have
/// `rings = segments = 0`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Mesh {
    pub vertices: Vec<Point3>,
    pub triangles: Vec<[u32; 3]>,
    pub rings: usize,
    pub segments: usize,
}

impl Mesh {
    pub fn from_triangles(vertices: Vec<Point3>, triangles: Vec<[u32; 3]>) -> Result<Mesh, Error> {
        let mesh = Mesh {
            vertices,
            triangles,
            rings: 0,
            segments: 0,
        };
        mesh.validate()?;
        Ok(mesh)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.vertices.len();
        for (k, tri) in self.triangles.iter().enumerate() {
            let [a, b, c] = *tri;
            if tri.iter().any(|&i| i as usize >= n) {
                return Err(Error::InvalidMesh(format!(
                    "triangle {k} references a vertex beyond {n}"
                )));
            }
            if a == b || b == c || a == c {
                return Err(Error::InvalidMesh(format!("triangle {k} repeats a vertex")));
            }
        }
        if let Some(i) = self
            .vertices
            .iter()
            .position(|v| !(v.x.is_finite() && v.y.is_finite() && v.z.is_finite()))
        {
            return Err(Error::InvalidMesh(format!("vertex {i} is not finite")));
        }
        Ok(())
    }

    pub fn triangle_area(&self, tri: [u32; 3]) -> f64 {
        let [a, b, c] = tri.map(|i| self.vertices[i as usize]);
        0.5 * (b - a).cross(c - a).norm()
    }

    pub fn area(&self) -> f64 {
        mesh_area(self)
    }
}

/// Rotates `p` by `theta` about `line`, out of the `z = 0` plane.
pub fn revolve_point(p: Point2, line: &Line, theta: f64) -> Point3 {
    if theta == 0.0 {
        return Point3::new(p.x, p.y, 0.0);
    }
    let d = line.decompose(p);
    let v = line.frame().normal;
    let (sin, cos) = theta.sin_cos();
    sweep(d.foot, v, d.signed_offset, cos, sin)
}

fn sweep(foot: Point2, normal: Point2, offset: f64, cos: f64, sin: f64) -> Point3 {
    Point3::new(
        foot.x + offset * cos * normal.x,
        foot.y + offset * cos * normal.y,
        offset * sin,
    )
}

/// Samples `rings` parameters uniformly over the curve's domain (both endpoints
/// included) and `segments` angles over a full turn, and stitches neighbouring
/// samples into two triangles per quad with a consistent winding.
pub fn revolve_mesh(
    curve: &ParametricCurve,
    line: &Line,
    rings: usize,
    segments: usize,
) -> Result<Mesh, Error> {
    if rings < 2 || segments < 3 {
        return Err(Error::MeshResolution { rings, segments });
    }
    let count = rings
        .checked_mul(segments)
        .filter(|&n| n <= u32::MAX as usize)
        .ok_or(Error::MeshResolution { rings, segments })?;

    let normal = line.frame().normal;
    let profile = curve
        .uniform_parameters(rings)
        .into_par_iter()
        .map(|t| curve.point(t).map(|p| (p, line.decompose(p))))
        .collect::<Result<Vec<_>, _>>()?;
    let angles: Vec<(f64, f64)> = (0..segments)
        .map(|j| {
            if j == 0 {
                (0.0, 1.0)
            } else {
                (TAU * j as f64 / segments as f64).sin_cos()
            }
        })
        .collect();

    let mut vertices = vec![Point3::default(); count];
    vertices
        .par_chunks_mut(segments)
        .zip(profile.par_iter())
        .for_each(|(ring, (p, d))| {
            ring[0] = Point3::new(p.x, p.y, 0.0);
            for (slot, &(sin, cos)) in ring.iter_mut().zip(&angles).skip(1) {
                *slot = sweep(d.foot, normal, d.signed_offset, cos, sin);
            }
        });

    let seg = segments as u32;
    let mut triangles = Vec::with_capacity(2 * (rings - 1) * segments);
    for i in 0..(rings - 1) as u32 {
        for j in 0..seg {
            let j1 = (j + 1) % seg;
            let a = i * seg + j;
            let b = i * seg + j1;
            let c = (i + 1) * seg + j1;
            let d = (i + 1) * seg + j;
            triangles.push([a, b, c]);
            triangles.push([a, c, d]);
        }
    }

    Ok(Mesh {
        vertices,
        triangles,
        rings,
        segments,
    })
}

/// Total area: the sum of `|AB x AC| / 2` over all triangles.
pub fn mesh_area(mesh: &Mesh) -> f64 {
    // Fixed chunking keeps the summation order independent of thread scheduling.
    mesh.triangles
        .par_chunks(8192)
        .map(|chunk| chunk.iter().map(|&t| mesh.triangle_area(t)).sum::<f64>())
        .collect::<Vec<f64>>()
        .into_iter()
        .sum()
}

/// Wavefront OBJ: `v x y z` per vertex, then `f i j k` per triangle (1-based).
pub fn export_obj<W: Write>(mesh: &Mesh, sink: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(sink);
    for v in &mesh.vertices {
        writeln!(out, "v {} {} {}", v.x, v.y, v.z)?;
    }
    for [a, b, c] in &mesh.triangles {
        writeln!(out, "f {} {} {}", a + 1, b + 1, c + 1)?;
    }
    out.flush()
}

/// Binary STL: 80 zero bytes, little-endian triangle count, then 50 bytes per
/// triangle (normal, three vertices, zero attribute word).
pub fn export_stl<W: Write>(mesh: &Mesh, sink: W) -> io::Result<()> {
    let count = u32::try_from(mesh.triangles.len())
        .map_err(|_| io::Error::new(io::ErrorKind::InvalidInput, "too many triangles for STL"))?;
    let mut out = io::BufWriter::new(sink);
    out.write_all(&[0u8; 80])?;
    out.write_all(&count.to_le_bytes())?;
    for &tri in &mesh.triangles {
        let [a, b, c] = tri.map(|i| mesh.vertices[i as usize]);
        let n = (b - a).cross(c - a);
        let len = n.norm();
        let normal = if len > 0.0 && len.is_finite() {
            [n.x / len, n.y / len, n.z / len]
        } else {
            [0.0; 3]
        };
        let coords = normal
            .into_iter()
            .chain([a, b, c].into_iter().flat_map(|p| [p.x, p.y, p.z]));
        for value in coords {
            out.write_all(&(value as f32).to_le_bytes())?;
        }
        out.write_all(&[0u8; 2])?;
    }
    out.flush()
}
