//! The four doubly exceptional points, their Jordan structure, and the unit
//! energy relation `a² = 2 − c/(4+c)` checked against the secular cubic.
//!
//! cargo run --example doubly_exceptional

use quasiherm::boundary::{dep_points, unit_energy_dep_relation};
use quasiherm::cubic::{secular_cubic, solve_cubic};
use quasiherm::matmodel::build_hamiltonian;
use quasiherm::spectrum::jordan_defect;
use quasiherm::ModelParams;

fn spread(a: f64, b: f64, c: f64) -> quasiherm::Result<f64> {
    let roots = solve_cubic(&secular_cubic(&ModelParams::three_level(a, b, c)?)?).complex_roots();
    let mut s: f64 = 0.0;
    for x in &roots {
        for y in &roots {
            s = s.max((x.0 - y.0).hypot(x.1 - y.1));
        }
    }
    Ok(s)
}

fn main() -> quasiherm::Result<()> {
    for d in dep_points(0.0)? {
        let h = build_hamiltonian(&ModelParams::three_level(d.a, d.b, 0.0)?)?;
        println!(
            "c = 0: ({:+.8}, {:+.8}) z = {}  Jordan defect {}",
            d.a,
            d.b,
            d.z,
            jordan_defect(&h, d.z, 3)?
        );
    }
    println!();
    println!(
        "{:>5}  {:>10} {:>10} {:>8}  {:>10}    {:>10} {:>10}  {:>10}",
        "c", "a", "b", "z", "spread", "a(unit)", "b(unit)", "spread"
    );
    for c in [-1.0, 0.0, 0.5, 1.0, 2.0, 4.0] {
        let d = dep_points(c)?[0];
        let u = unit_energy_dep_relation(c)?[0];
        println!(
            "{c:>5}  {:>10.6} {:>10.6} {:>8.4}  {:>10.2e}    {:>10.6} {:>10.6}  {:>10.2e}",
            d.a,
            d.b,
            d.z,
            spread(d.a, d.b, c)?,
            u.a,
            u.b,
            spread(u.a, u.b, c)?
        );
    }
    Ok(())
}
