//! Growth of the reality interval `|a| < 1 + η(b)` at small `b`, and the
//! expansion of the boundary around the axis point `(1, 0)`.
//!
//! cargo run --example small_coupling

use quasiherm::boundary::{epsilon_expansion_check, lemma_eta};

fn main() -> quasiherm::Result<()> {
    println!("{:>6}  {:>14}  {:>10}", "b", "eta", "eta/b^2");
    for k in 1..=10 {
        let b = 0.01 * k as f64;
        let eta = lemma_eta(b, 1e-13)?;
        println!("{b:>6.2}  {eta:>14.6e}  {:>10.6}", eta / (b * b));
    }
    println!("limit 1/6 = {:.6}", 1.0 / 6.0);
    println!();
    println!(
        "{:>8}  {:>12}  {:>12}  {:>8}  {:>8}",
        "epsilon", "a error", "b error", "a ratio", "b ratio"
    );
    let mut previous: Option<(f64, f64)> = None;
    for eps in [0.1, 0.05, 0.025, 0.0125] {
        let (ea, eb) = epsilon_expansion_check(eps)?;
        let (ra, rb) = previous.map_or((f64::NAN, f64::NAN), |(pa, pb)| (pa / ea, pb / eb));
        println!("{eps:>8}  {ea:>12.4e}  {eb:>12.4e}  {ra:>8.2}  {rb:>8.2}");
        previous = Some((ea, eb));
    }
    Ok(())
}
