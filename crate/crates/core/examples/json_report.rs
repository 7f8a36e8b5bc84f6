//! Builds run configurations in code and renders them the way the CLI does.
//!
//! cargo run --example json_report

use quasiherm::report::{run, Command, Grid, OutputFormat, RunConfig, Sweep, SweepVariable};

fn main() -> quasiherm::Result<()> {
    let sweep = RunConfig {
        command: Command::Spectrum {
            dim: 3,
            a: 0.0,
            b: 0.5,
            c: 0.0,
            sweep: Some(Sweep {
                variable: SweepVariable::A,
                grid: Grid {
                    start: 0.9,
                    stop: 1.2,
                    count: 4,
                },
            }),
        },
        format: OutputFormat::Csv,
    };
    print!("{}", run(&sweep)?);
    let lemma = RunConfig {
        command: Command::Lemma {
            b: Grid {
                start: 0.01,
                stop: 0.02,
                count: 2,
            },
            tol: 1e-13,
        },
        format: OutputFormat::Json,
    };
    print!("{}", run(&lemma)?);
    Ok(())
}
