//! Traces the boundary of the reality domain at `c = 0` in closed form and by
//! ray bisection, compares them and writes the SVG figure.
//!
//! cargo run --example boundary_figure -- [out.svg]

use std::f64::consts::PI;

use quasiherm::boundary::{boundary_radius, parametric_boundary, Method, Quadrant};
use quasiherm::report::{run, Command, OutputFormat, RunConfig};

fn main() -> quasiherm::Result<()> {
    let mut worst: f64 = 0.0;
    for k in 0..=200 {
        let beta = -0.999 + 1.998 * k as f64 / 200.0;
        let p = parametric_boundary(beta, Quadrant::PlusPlus)?;
        let r = boundary_radius(p.angle(), 0.0, 1e-13)?;
        worst = worst.max((r - p.radius()).abs());
    }
    println!("closed form vs bisection, 201 samples: max radius gap {worst:.2e}");

    for k in 0..8 {
        let theta = k as f64 * PI / 4.0;
        println!(
            "r({:>4.0} deg) = {:.12}",
            theta.to_degrees(),
            boundary_radius(theta, 0.0, 1e-13)?
        );
    }

    let config = RunConfig {
        command: Command::Boundary {
            method: Method::Parametric,
            c: 0.0,
            resolution: 500,
            tol: 1e-12,
        },
        format: OutputFormat::Svg,
    };
    let path = std::env::args().nth(1).unwrap_or_else(|| "boundary.svg".into());
    std::fs::write(&path, run(&config)?)?;
    println!("wrote {path}");
    Ok(())
}
