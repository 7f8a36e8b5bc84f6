//! How the diagonal shift `c` deforms the boundary of the reality domain.
//!
//! cargo run --example shift_deformation

use std::f64::consts::PI;

use quasiherm::boundary::boundary_radius;

fn radii(c: f64, rays: usize) -> quasiherm::Result<Vec<f64>> {
    (0..rays)
        .map(|k| boundary_radius(2.0 * PI * k as f64 / rays as f64, c, 1e-12))
        .collect()
}

fn main() -> quasiherm::Result<()> {
    let rays = 360;
    let base = radii(0.0, rays)?;
    println!("{:>6}  {:>12}  {:>12}  {:>12}", "c", "min r", "max r", "max |r - r0|");
    for c in [0.125, 0.25, 0.5, 1.0, 2.0] {
        let r = radii(c, rays)?;
        let dev = r.iter().zip(&base).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        let (lo, hi) = r
            .iter()
            .fold((f64::INFINITY, 0.0f64), |(lo, hi), &x| (lo.min(x), hi.max(x)));
        println!("{c:>6}  {lo:>12.6}  {hi:>12.6}  {dev:>12.6}");
    }
    let r1 = radii(1.0, rays)?;
    let mirror = (0..rays)
        .map(|k| (r1[k] - r1[(rays + rays / 4 - k) % rays]).abs())
        .fold(0.0, f64::max);
    println!("c = 1: largest gap between r(theta) and r(pi/2 - theta) is {mirror:.4}");
    Ok(())
}
