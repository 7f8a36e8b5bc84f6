//! The family of metrics that make the two-level model quasi-Hermitian, and
//! its degeneration as `a → 1`.
//!
//! cargo run --example metric_family

use quasiherm::matmodel::build_hamiltonian;
use quasiherm::metric::{build_metric, ep_degeneration_scan, positivity_certificate, quasi_hermiticity_residual};
use quasiherm::ModelParams;

fn main() -> quasiherm::Result<()> {
    let a = 0.5;
    let h = build_hamiltonian(&ModelParams::two_level(a)?)?;
    println!("a = {a}");
    for gamma in [0.0, 0.4, 0.8, 1.2, 1.5] {
        let m = build_metric(a, gamma)?;
        let pos = positivity_certificate(&m.theta)?;
        println!(
            "  gamma {gamma:.1}: Theta = [[{:.6}, {:.6}], [{:.6}, {:.6}]]  det {:.6}  min eig {:.6}  residual {:.1e}",
            m.theta[(0, 0)],
            m.theta[(0, 1)],
            m.theta[(1, 0)],
            m.theta[(1, 1)],
            m.determinant(),
            pos.min_eigenvalue,
            quasi_hermiticity_residual(&h, &m.theta)?
        );
    }
    let approach: Vec<f64> = (1..=6).map(|k| 1.0 - 10f64.powi(-k)).collect();
    let dets = ep_degeneration_scan(0.0, &approach)?;
    println!("det as a -> 1 at gamma = 0:");
    for (a, d) in approach.iter().zip(dets) {
        println!("  a = {a:<10} det = {d:.3e}");
    }
    if let Err(e) = build_metric(1.0, 0.0) {
        println!("at the exceptional point: {e}");
    }
    Ok(())
}
