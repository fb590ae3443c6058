//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails.

mod common;

use std::f64::consts::{PI, SQRT_2, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{central_diff, random_expr, rel_err, well_conditioned, GaussLegendre, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use revolve_core::mesh::{export_obj, export_stl};
use revolve_core::{
    mesh_area, revolve_mesh, surface_area, surface_area_graph_slant, surface_area_x_axis,
    surface_area_y_axis, Line, Mesh, ParametricCurve, Point3,
};

const TOL: f64 = 1e-10;

/// Mesh oracle values at 4096×4096 for y = t² − 3t + 12 on [0, 3].
const PARABOLA_ABOUT_3X_PLUS_4Y: f64 = 337.022112453723;
const PARABOLA_ABOUT_3X_MINUS_4Y: f64 = 273.0922809199886;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, ok: impl Into<String>, fail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(fail())
    }
}

fn area(c: &ParametricCurve, l: &Line) -> Result<f64, String> {
    surface_area(c, l, TOL)
        .map(|r| r.area)
        .map_err(|e| e.to_string())
}

fn circle(r: f64) -> ParametricCurve {
    ParametricCurve::parse(&format!("{r}*cos(t)"), &format!("{r}*sin(t)"), 0.0, TAU).unwrap()
}

fn torus_closed_form() -> Outcome {
    let start = Instant::now();
    let got = area(&circle(1.0), &Line::new(3.0, 4.0, 25.0).unwrap())?;
    let elapsed = start.elapsed();
    let err = rel_err(got, 4.0 * PI * PI * 5.0);
    check(
        err <= 1e-8 && elapsed < Duration::from_secs(1),
        format!("rel err {err:.1e} in {elapsed:?}"),
        || format!("area {got}, rel err {err:.1e}, {elapsed:?}"),
    )
}

fn torus_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let theta = rng.gen_range(0.0..TAU);
        let scale = rng.gen_range(0.1..10.0);
        let (a, b) = (scale * theta.cos(), scale * theta.sin());
        let r = rng.gen_range(0.1..3.0);
        let big_r = r * rng.gen_range(1.05..5.0);
        let c = big_r * scale * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let got = area(&circle(r), &Line::new(a, b, c).unwrap())?;
        worst = worst.max(rel_err(got, 4.0 * PI * PI * big_r * r));
    }
    let elapsed = start.elapsed();
    check(
        worst <= 1e-8 && elapsed < Duration::from_secs(10),
        format!("worst rel err {worst:.1e} in {elapsed:?}"),
        || format!("worst rel err {worst:.1e} in {elapsed:?}"),
    )
}

/// `2π ∫ |p| sqrt(1 + p'^2)` over [a, b] by composite Gauss-Legendre.
fn direct_graph_area(p: &Poly, a: f64, b: f64) -> f64 {
    let dp = p.derivative();
    let gl = GaussLegendre::new(24);
    TAU * gl.integrate(
        |t| p.eval(t).abs() * (1.0 + dp.eval(t).powi(2)).sqrt(),
        a,
        b,
        64,
    )
}

fn graph_reduction(inverse: bool) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(if inverse { 3 } else { 2 });
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let a = rng.gen_range(-2.0..1.0);
        let b = a + rng.gen_range(0.5..2.0);
        let p = Poly::random(&mut rng, 5).lifted_above(a, b, 0.5);
        let (curve, line) = if inverse {
            (
                ParametricCurve::inverse_graph(&p.source(), a, b),
                Line::y_axis(),
            )
        } else {
            (ParametricCurve::graph(&p.source(), a, b), Line::x_axis())
        };
        let got = area(&curve.map_err(|e| e.to_string())?, &line)?;
        worst = worst.max(rel_err(got, direct_graph_area(&p, a, b)));
    }
    check(worst <= 1e-12, format!("worst rel err {worst:.1e}"), || {
        format!("worst rel err {worst:.1e}")
    })
}

fn corollary_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let a = rng.gen_range(-2.0..1.0);
        let b = a + rng.gen_range(0.5..2.0);
        let f = Poly::random(&mut rng, 4).source();
        let (m, k) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let slant = surface_area_graph_slant(&f, a, b, m, k, TOL).map_err(|e| e.to_string())?;
        let general = area(
            &ParametricCurve::graph(&f, a, b).unwrap(),
            &Line::new(-m, 1.0, k).unwrap(),
        )?;
        worst = worst.max(rel_err(slant.area, general));
    }
    check(worst <= 1e-12, format!("worst rel err {worst:.1e}"), || {
        format!("worst rel err {worst:.1e}")
    })
}

fn golden_suite() -> Outcome {
    let cone = ParametricCurve::parse("t", "t", 0.0, 1.0).unwrap();
    let sphere = ParametricCurve::parse("cos(t)", "sin(t)", 0.0, PI).unwrap();
    let cylinder = ParametricCurve::parse("5", "t", 0.0, 2.0).unwrap();
    let on_axis = ParametricCurve::graph("t", 0.0, 1.0).unwrap();
    let cases = [
        ("cone", surface_area_x_axis(&cone, TOL), PI * SQRT_2),
        ("sphere", surface_area_x_axis(&sphere, TOL), 4.0 * PI),
        (
            "cylinder",
            surface_area_y_axis(&cylinder, TOL),
            TAU * 5.0 * 2.0,
        ),
        (
            "on-axis",
            surface_area(&on_axis, &Line::from_slope(1.0, 0.0).unwrap(), TOL),
            0.0,
        ),
    ];
    let mut failures = Vec::new();
    for (name, got, want) in cases {
        let got = got.map_err(|e| format!("{name}: {e}"))?.area;
        let ok = if want == 0.0 {
            got == 0.0
        } else {
            rel_err(got, want) <= 1e-9
        };
        if !ok {
            failures.push(format!("{name}: {got} vs {want}"));
        }
    }
    check(
        failures.is_empty(),
        "cone, sphere, cylinder, on-axis",
        || failures.join("; "),
    )
}

fn crossing_handling() -> Outcome {
    let c = ParametricCurve::parse("t", "t", -1.0, 1.0).unwrap();
    let r = surface_area_x_axis(&c, TOL).map_err(|e| e.to_string())?;
    let err = rel_err(r.area, 2.0 * SQRT_2 * PI);
    check(
        err <= 1e-9 && r.crossings.len() == 1 && r.crossings[0].abs() <= 1e-12,
        format!("rel err {err:.1e}, crossings {:?}", r.crossings),
        || format!("area {}, crossings {:?}", r.area, r.crossings),
    )
}

fn mesh_agreement() -> Outcome {
    let parabola = || ParametricCurve::graph("t^2-3*t+12", 0.0, 3.0).unwrap();
    let cases = [
        (
            "torus",
            circle(1.0),
            Line::new(3.0, 4.0, 25.0).unwrap(),
            None,
        ),
        (
            "sphere",
            ParametricCurve::parse("cos(t)", "sin(t)", 0.0, PI).unwrap(),
            Line::x_axis(),
            None,
        ),
        (
            "cone",
            ParametricCurve::parse("t", "t", 0.0, 1.0).unwrap(),
            Line::x_axis(),
            None,
        ),
        (
            "parabola/3x+4y=0",
            parabola(),
            Line::new(3.0, 4.0, 0.0).unwrap(),
            Some(PARABOLA_ABOUT_3X_PLUS_4Y),
        ),
        (
            "parabola/3x-4y=0",
            parabola(),
            Line::new(3.0, -4.0, 0.0).unwrap(),
            Some(PARABOLA_ABOUT_3X_MINUS_4Y),
        ),
    ];
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for (name, c, l, pinned) in cases {
        let q = area(&c, &l)?;
        let m = mesh_area(&revolve_mesh(&c, &l, 2048, 2048).map_err(|e| e.to_string())?);
        let mut err = rel_err(m, q);
        if let Some(p) = pinned {
            err = err.max(rel_err(q, p));
        }
        worst = worst.max(err);
        if err > 1e-3 {
            failures.push(format!("{name}: quadrature {q}, mesh {m}"));
        }
    }
    check(
        failures.is_empty(),
        format!("worst rel diff {worst:.1e}"),
        || failures.join("; "),
    )
}

fn invariances() -> Outcome {
    let mut failures = Vec::new();

    let c = ParametricCurve::graph("t^2-3*t+12", 0.0, 3.0).unwrap();
    let l = Line::new(3.0, -4.0, 2.0).unwrap();
    let base = area(&c, &l)?;
    for lambda in [-1.0, 3.0, 0.01] {
        let got = area(&c, &l.scaled(lambda).map_err(|e| e.to_string())?)?;
        if rel_err(got, base) > 1e-9 {
            failures.push(format!("scaling by {lambda}: {got} vs {base}"));
        }
    }

    let (s, co) = (30f64.to_radians().sin(), 30f64.to_radians().cos());
    let (dx, dy) = (1.0, -2.0);
    let cone = ParametricCurve::parse("t", "t", 0.0, 1.0).unwrap();
    let moved = ParametricCurve::parse(
        &format!("{co}*t - {s}*t + {dx}"),
        &format!("{s}*t + {co}*t + {dy}"),
        0.0,
        1.0,
    )
    .unwrap();
    let (na, nb) = (-s, co);
    let axis = Line::new(na, nb, na * dx + nb * dy).unwrap();
    let (before, after) = (area(&cone, &Line::x_axis())?, area(&moved, &axis)?);
    if rel_err(after, before) > 1e-9 {
        failures.push(format!("rigid motion: {after} vs {before}"));
    }

    let squared = ParametricCurve::parse("t^2", "t^2", 0.0, 1.0).unwrap();
    let reparam = area(&squared, &Line::x_axis())?;
    if rel_err(reparam, before) > 1e-9 {
        failures.push(format!("reparametrization: {reparam} vs {before}"));
    }

    check(
        failures.is_empty(),
        "scaling, rigid motion, reparametrization",
        || failures.join("; "),
    )
}

fn derivatives_and_formats() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checked = 0;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let e = random_expr(&mut rng, 5);
        let d = e.differentiate().map_err(|err| format!("{e}: {err}"))?;
        for _ in 0..100 {
            let t = rng.gen_range(-3.0..3.0);
            if !well_conditioned(&e, t) {
                continue;
            }
            let (Ok(exact), Some(fd)) = (d.eval(t), central_diff(&e, t, 1e-6)) else {
                continue;
            };
            worst = worst.max((exact - fd).abs() / fd.abs().max(1.0));
            checked += 1;
        }
    }
    if worst > 1e-6 {
        return Err(format!("derivative worst rel err {worst:.1e}"));
    }

    let empty = Mesh::from_triangles(Vec::new(), Vec::new()).map_err(|e| e.to_string())?;
    let one = Mesh::from_triangles(
        vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
        ],
        vec![[0, 1, 2]],
    )
    .map_err(|e| e.to_string())?;
    let stl = |m: &Mesh| {
        let mut buf = Vec::new();
        export_stl(m, &mut buf).map(|_| buf)
    };
    let (empty_stl, one_stl) = (stl(&empty).unwrap(), stl(&one).unwrap());
    let mut obj = Vec::new();
    export_obj(&one, &mut obj).unwrap();
    let obj_ok = obj == b"v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n";
    let normal_ok = one_stl[84..96] == [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 128, 63];
    check(
        empty_stl.len() == 84 && one_stl.len() == 134 && obj_ok && normal_ok,
        format!("{checked} derivative points, worst {worst:.1e}; STL 84/134 bytes; OBJ exact"),
        || {
            format!(
                "STL sizes {}/{}, OBJ {:?}",
                empty_stl.len(),
                one_stl.len(),
                String::from_utf8_lossy(&obj)
            )
        },
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("torus closed form", torus_closed_form),
        ("torus line-invariance sweep", torus_sweep),
        ("graph about the x-axis", || graph_reduction(false)),
        ("inverse graph about the y-axis", || graph_reduction(true)),
        ("slant line equivalence", corollary_equivalence),
        ("closed-form golden suite", golden_suite),
        ("crossing handling", crossing_handling),
        ("mesh oracle agreement", mesh_agreement),
        ("invariance suite", invariances),
        ("derivatives and export formats", derivatives_and_formats),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(120) {
        failed += 1;
        println!("FAIL    total runtime {elapsed:?} exceeds 2 minutes");
    }
    println!(
        "{} of {} criteria passed in {elapsed:?}",
        criteria.len() - failed.min(criteria.len()),
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
