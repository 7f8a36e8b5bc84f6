//! Spectrum and pseudo-Hermiticity of the two-level model across `a = ±1`.
//!
//! cargo run --example two_level

use quasiherm::cubic::solve_quadratic;
use quasiherm::matmodel::{build_hamiltonian, build_parity, pseudo_hermiticity_residual};
use quasiherm::spectrum::classify;
use quasiherm::ModelParams;

fn main() -> quasiherm::Result<()> {
    let parity = build_parity(2)?;
    println!("{:>6}  {:>18}  {:>18}  {:<18}  residual", "a", "E-", "E+", "class");
    for a in [0.0, 0.3, 0.6, 0.9, 0.99, 1.0, 1.01, 1.5] {
        let params = ModelParams::two_level(a)?;
        let h = build_hamiltonian(&params)?;
        let class = classify(&params)?.class;
        let roots = solve_quadratic(a).complex_roots();
        let show = |(re, im): (f64, f64)| {
            if im == 0.0 {
                format!("{re:.12}")
            } else {
                format!("{re:.3}{im:+.12}i")
            }
        };
        println!(
            "{a:>6}  {:>18}  {:>18}  {:<18}  {:.1e}",
            show(roots[0]),
            show(roots[1]),
            class.as_str(),
            pseudo_hermiticity_residual(&h, &parity)?
        );
    }
    Ok(())
}
