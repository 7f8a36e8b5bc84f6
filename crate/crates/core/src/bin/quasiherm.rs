use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quasiherm::boundary::Method;
use quasiherm::report::{self, Command, Grid, OutputFormat, RunConfig, Sweep, SweepVariable};
use quasiherm::Error;

#[derive(Parser, Debug)]
#[command(
    version,
    about = "Spectra, exceptional points and metrics of small PT-symmetric matrix models"
)]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Output format (svg only for `boundary`).
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; `-` or absent writes to standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Parametric,
    Bisect,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Classify the spectrum at a point or along a sweep.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        #[arg(long, default_value_t = 0.0)]
        b: f64,
        #[arg(long, default_value_t = 0.0)]
        c: f64,
        /// VAR START STOP COUNT, with VAR one of a, b, c.
        #[arg(long, num_args = 4, value_names = ["VAR", "START", "STOP", "COUNT"])]
        sweep: Option<Vec<String>>,
    },
    /// Trace the boundary of the reality domain of the three-level model.
    #[command(allow_negative_numbers = true)]
    Boundary {
        #[arg(long, value_enum, default_value_t = MethodArg::Parametric)]
        method: MethodArg,
        #[arg(long, default_value_t = 0.0)]
        c: f64,
        /// Samples per quadrant arc (parametric) or number of rays (bisect).
        #[arg(long, default_value_t = 360)]
        resolution: usize,
        #[arg(long, default_value_t = report::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// The four doubly exceptional points at shift c.
    #[command(allow_negative_numbers = true)]
    Dep {
        #[arg(long, default_value_t = 0.0)]
        c: f64,
    },
    /// Metric family of the two-level model on an (a, gamma) grid.
    #[command(allow_negative_numbers = true)]
    Metric {
        #[arg(long, conflicts_with = "a_grid")]
        a: Option<f64>,
        #[arg(long, conflicts_with = "gamma_grid")]
        gamma: Option<f64>,
        #[arg(long, num_args = 3, value_names = ["START", "STOP", "COUNT"])]
        a_grid: Option<Vec<String>>,
        #[arg(long, num_args = 3, value_names = ["START", "STOP", "COUNT"])]
        gamma_grid: Option<Vec<String>>,
        /// Overall positive multiple applied to the metric.
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
    },
    /// Growth of the reality interval in a at small coupling b.
    #[command(allow_negative_numbers = true)]
    Lemma {
        #[arg(long, num_args = 3, value_names = ["START", "STOP", "COUNT"], required = true)]
        b_grid: Vec<String>,
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
    },
}

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Error> {
    s.parse()
        .map_err(|_| Error::Usage(format!("cannot parse {what} from '{s}'")))
}

fn grid(v: &[String]) -> Result<Grid, Error> {
    Ok(Grid {
        start: number(&v[0], "grid start")?,
        stop: number(&v[1], "grid stop")?,
        count: number(&v[2], "grid count")?,
    })
}

fn config(cli: &Cli) -> Result<RunConfig, Error> {
    let command = match &cli.command {
        Cmd::Spectrum { dim, a, b, c, sweep } => {
            let sweep = match sweep {
                None => None,
                Some(v) => Some(Sweep {
                    variable: match v[0].as_str() {
                        "a" => SweepVariable::A,
                        "b" => SweepVariable::B,
                        "c" => SweepVariable::C,
                        other => return Err(Error::Usage(format!("unknown sweep variable '{other}'"))),
                    },
                    grid: grid(&v[1..])?,
                }),
            };
            Command::Spectrum {
                dim: *dim,
                a: *a,
                b: *b,
                c: *c,
                sweep,
            }
        }
        Cmd::Boundary {
            method,
            c,
            resolution,
            tol,
        } => Command::Boundary {
            method: match method {
                MethodArg::Parametric => Method::Parametric,
                MethodArg::Bisect => Method::Bisection,
            },
            c: *c,
            resolution: *resolution,
            tol: *tol,
        },
        Cmd::Dep { c } => Command::Dep { c: *c },
        Cmd::Metric {
            a,
            gamma,
            a_grid,
            gamma_grid,
            scale,
        } => Command::Metric {
            a: match a_grid {
                Some(v) => grid(v)?,
                None => Grid::point(a.unwrap_or(0.0)),
            },
            gamma: match gamma_grid {
                Some(v) => grid(v)?,
                None => Grid::point(gamma.unwrap_or(0.0)),
            },
            scale: *scale,
        },
        Cmd::Lemma { b_grid, tol } => Command::Lemma {
            b: grid(b_grid)?,
            tol: *tol,
        },
    };
    let format = match cli.format {
        Format::Csv => OutputFormat::Csv,
        Format::Json => OutputFormat::Json,
        Format::Svg => OutputFormat::Svg,
    };
    Ok(RunConfig { command, format })
}

fn execute(cli: &Cli) -> Result<(), Error> {
    let text = report::run(&config(cli)?)?;
    match cli.output.as_deref() {
        Some(path) if path.as_os_str() != "-" => std::fs::write(path, text)?,
        _ => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
