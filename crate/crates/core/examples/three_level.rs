//! Classifies points of the three-level model and prints the secular cubic.
//!
//! cargo run --example three_level -- [a b c]

use quasiherm::cubic::secular_cubic;
use quasiherm::spectrum::classify;
use quasiherm::ModelParams;

fn report(a: f64, b: f64, c: f64) -> quasiherm::Result<()> {
    let params = ModelParams::three_level(a, b, c)?;
    let poly = secular_cubic(&params)?;
    let s = classify(&params)?;
    let [c3, c2, c1, c0] = poly.coefficients();
    println!("(a, b, c) = ({a}, {b}, {c})");
    println!("  secular cubic  {c3:+.6}E^3 {c2:+.6}E^2 {c1:+.6}E {c0:+.6}");
    println!(
        "  discriminant   {:.6e} (zero band {:.1e})",
        s.roots.discriminant, s.roots.zero_band
    );
    println!("  class          {} (Jordan defect {})", s.class, s.jordan_defect);
    for (re, im) in s.roots.complex_roots() {
        println!("  root           {re:+.10} {im:+.10}i");
    }
    Ok(())
}

fn main() -> quasiherm::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if let [a, b, c] = args[..] {
        return report(a, b, c);
    }
    let s = std::f64::consts::SQRT_2;
    for (a, b, c) in [
        (0.5, 0.5, 0.0),
        (1.0, 0.0, 0.0),
        (s, s, 0.0),
        (1.0, 1.5, 0.0),
        (0.3, 0.2, 1.0),
    ] {
        report(a, b, c)?;
    }
    Ok(())
}
