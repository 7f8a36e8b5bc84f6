//! Tabular output and the command runners behind the `quasiherm` binary.
//!
//! CSV: header row, comma separated, LF endings, floats as 17 significant
//! digits (`{:.16e}`). JSON: `{"config": {...}, "records": [...]}` with
//! shortest round-trip floats. SVG: 1.1, viewport `[-2.2, 2.2]²`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::boundary::{self, BoundaryCurve, Method, Quadrant};
use crate::error::{Error, Result};
use crate::matmodel::{build_hamiltonian, ModelParams};
use crate::metric;
use crate::spectrum;

/// Lower bound on user-supplied tolerances.
pub const MIN_TOLERANCE: f64 = 1e-14;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MIN_RESOLUTION: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    pub fn to_csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => format!("{x:.16e}"),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn parse(field: &str) -> Cell {
        if field.is_empty() {
            return Cell::Empty;
        }
        match field {
            "true" => return Cell::Bool(true),
            "false" => return Cell::Bool(false),
            _ => {}
        }
        if let Ok(i) = field.parse::<i64>() {
            return Cell::Int(i);
        }
        match field.parse::<f64>() {
            Ok(x) => Cell::Num(x),
            Err(_) => Cell::Text(field.to_string()),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Num(x) => json!(x),
            Cell::Bool(b) => json!(b),
            Cell::Text(s) => json!(s),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Cell::to_csv).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn parse_csv(text: &str) -> Result<Table> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Contract("empty CSV".into()))?;
        let columns: Vec<String> = header.split(',').map(str::to_string).collect();
        let mut rows = Vec::new();
        for (n, line) in lines.enumerate() {
            let row: Vec<Cell> = line.split(',').map(Cell::parse).collect();
            if row.len() != columns.len() {
                return Err(Error::Contract(format!(
                    "CSV row {} has {} fields, header has {}",
                    n + 1,
                    row.len(),
                    columns.len()
                )));
            }
            rows.push(row);
        }
        Ok(Table { columns, rows })
    }

    pub fn records(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.clone(), v.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect()
    }

    pub fn to_json(&self, config: &RunConfig) -> String {
        let doc = json!({
            "config": config,
            "records": self.records(),
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

/// `count` evenly spaced values from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn point(x: f64) -> Self {
        Self {
            start: x,
            stop: x,
            count: 1,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i as f64 / (self.count - 1) as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepVariable {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sweep {
    pub variable: SweepVariable,
    pub grid: Grid,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
pub enum Command {
    Spectrum {
        dim: usize,
        a: f64,
        b: f64,
        c: f64,
        sweep: Option<Sweep>,
    },
    Boundary {
        method: Method,
        c: f64,
        resolution: usize,
        tol: f64,
    },
    Dep {
        c: f64,
    },
    Metric {
        a: Grid,
        gamma: Grid,
        scale: f64,
    },
    Lemma {
        b: Grid,
        tol: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let usage = |m: String| Err(Error::Usage(m));
        if self.format == OutputFormat::Svg && !matches!(self.command, Command::Boundary { .. }) {
            return usage("svg output is only available for the boundary subcommand".into());
        }
        let check_tol = |tol: f64| {
            if tol >= MIN_TOLERANCE && tol.is_finite() {
                Ok(())
            } else {
                Err(Error::Usage(format!(
                    "tolerance {tol} must be at least {MIN_TOLERANCE}"
                )))
            }
        };
        let check_grid = |name: &str, g: &Grid, sweep: bool| {
            if (sweep && g.count < 2) || g.count == 0 {
                return Err(Error::Usage(format!("{name} needs a count of at least 2")));
            }
            if !(g.start.is_finite() && g.stop.is_finite()) {
                return Err(Error::Usage(format!("{name} bounds must be finite")));
            }
            Ok(())
        };
        match &self.command {
            Command::Spectrum { dim, sweep, .. } => {
                if let Some(s) = sweep {
                    check_grid("sweep", &s.grid, true)?;
                    if *dim == 2 && s.variable != SweepVariable::A {
                        return usage("the two-level model can only sweep a".into());
                    }
                }
            }
            Command::Boundary {
                method,
                c,
                resolution,
                tol,
            } => {
                if *resolution < MIN_RESOLUTION {
                    return usage(format!("resolution must be at least {MIN_RESOLUTION}"));
                }
                if *method == Method::Parametric && *c != 0.0 {
                    return usage("the parametric boundary is only available at c = 0".into());
                }
                check_tol(*tol)?;
            }
            Command::Dep { .. } => {}
            Command::Metric { a, gamma, scale } => {
                check_grid("a grid", a, false)?;
                check_grid("gamma grid", gamma, false)?;
                if !(*scale > 0.0 && scale.is_finite()) {
                    return usage(format!("scale {scale} must be positive"));
                }
            }
            Command::Lemma { b, tol } => {
                check_grid("b grid", b, false)?;
                check_tol(*tol)?;
            }
        }
        Ok(())
    }
}

/// Runs a command and renders it in the configured format.
pub fn run(config: &RunConfig) -> Result<String> {
    config.validate()?;
    if config.format == OutputFormat::Svg {
        let (poly, _) = boundary_points(config)?;
        return Ok(render_svg(&poly));
    }
    let table = match &config.command {
        Command::Spectrum { .. } => spectrum_table(config)?,
        Command::Boundary { .. } => boundary_table(config)?,
        Command::Dep { c } => dep_table(*c)?,
        Command::Metric { a, gamma, scale } => metric_table(a, gamma, *scale)?,
        Command::Lemma { b, tol } => lemma_table(b, *tol)?,
    };
    Ok(match config.format {
        OutputFormat::Json => table.to_json(config),
        _ => table.to_csv(),
    })
}

pub fn spectrum_table(config: &RunConfig) -> Result<Table> {
    let Command::Spectrum { dim, a, b, c, sweep } = &config.command else {
        return Err(Error::Usage("not a spectrum command".into()));
    };
    let mut table = Table::new(&[
        "dim",
        "a",
        "b",
        "c",
        "class",
        "root_1",
        "root_2",
        "root_3",
        "pair_re",
        "pair_im",
        "jordan_defect",
        "discriminant",
        "zero_band",
    ]);
    let points: Vec<(f64, f64, f64)> = match sweep {
        None => vec![(*a, *b, *c)],
        Some(s) => s
            .grid
            .values()
            .into_iter()
            .map(|v| match s.variable {
                SweepVariable::A => (v, *b, *c),
                SweepVariable::B => (*a, v, *c),
                SweepVariable::C => (*a, *b, v),
            })
            .collect(),
    };
    for (a, b, c) in points {
        let params = ModelParams::new(*dim, a, b, c)?;
        let s = spectrum::classify(&params)?;
        let mut roots: Vec<Cell> = s.roots.real_roots().into_iter().map(Cell::Num).collect();
        roots.resize(3, Cell::Empty);
        let mut row = vec![Cell::from(*dim), a.into(), b.into(), c.into(), s.class.as_str().into()];
        row.extend(roots);
        row.push(s.roots.pair.map(|p| p.re).into());
        row.push(s.roots.pair.map(|p| p.im).into());
        row.push(s.jordan_defect.into());
        row.push(s.roots.discriminant.into());
        row.push(s.roots.zero_band.into());
        table.push(row);
    }
    Ok(table)
}

type Polyline = Vec<(f64, f64)>;

/// Closed boundary polyline plus the generating parameter of each point.
fn boundary_points(config: &RunConfig) -> Result<(Polyline, Vec<BoundaryCurve>)> {
    let Command::Boundary {
        method,
        c,
        resolution,
        tol,
    } = &config.command
    else {
        return Err(Error::Usage(
            "svg output is only available for the boundary subcommand".into(),
        ));
    };
    let arcs = match method {
        Method::Parametric => Quadrant::ALL
            .iter()
            .enumerate()
            .map(|(i, q)| {
                let mut arc = boundary::parametric_arc(*q, *resolution, 0.0)?;
                // alternate direction so the arcs join into a closed loop
                if i % 2 == 1 {
                    arc.points.reverse();
                    arc.parameters.reverse();
                }
                Ok(arc)
            })
            .collect::<Result<Vec<_>>>()?,
        Method::Bisection => vec![boundary::bisect_curve(*resolution, *c, *tol)?],
    };
    let mut poly: Vec<(f64, f64)> = arcs
        .iter()
        .flat_map(|arc| arc.points.iter().map(|p| (p.a, p.b)))
        .collect();
    if let Some(&first) = poly.first() {
        poly.push(first);
    }
    Ok((poly, arcs))
}

pub fn boundary_table(config: &RunConfig) -> Result<Table> {
    let (_, arcs) = boundary_points(config)?;
    let mut table = Table::new(&["method", "beta_or_theta", "a", "b", "z", "y"]);
    for arc in &arcs {
        for (p, t) in arc.points.iter().zip(&arc.parameters) {
            table.push(vec![
                arc.method.as_str().into(),
                (*t).into(),
                p.a.into(),
                p.b.into(),
                p.double_root_z.into(),
                p.single_root_y.into(),
            ]);
        }
    }
    Ok(table)
}

pub fn dep_table(c: f64) -> Result<Table> {
    let mut table = Table::new(&["a", "b", "c", "z"]);
    for d in boundary::dep_points(c)? {
        table.push(vec![d.a.into(), d.b.into(), d.c.into(), d.z.into()]);
    }
    Ok(table)
}

pub fn metric_table(a_grid: &Grid, gamma_grid: &Grid, scale: f64) -> Result<Table> {
    let mut table = Table::new(&[
        "a",
        "gamma",
        "alpha",
        "xi",
        "theta_11",
        "theta_12",
        "theta_21",
        "theta_22",
        "det",
        "min_eigenvalue",
        "positive",
        "residual",
    ]);
    for a in a_grid.values() {
        let h = build_hamiltonian(&ModelParams::two_level(a)?)?;
        for gamma in gamma_grid.values() {
            let m = metric::build_metric(a, gamma)?;
            let theta = m.scaled(scale)?;
            let pos = metric::positivity_certificate(&theta)?;
            let residual = metric::quasi_hermiticity_residual(&h, &theta)?;
            let det = theta[(0, 0)] * theta[(1, 1)] - theta[(0, 1)] * theta[(1, 0)];
            table.push(vec![
                a.into(),
                gamma.into(),
                m.alpha.into(),
                m.xi.into(),
                theta[(0, 0)].into(),
                theta[(0, 1)].into(),
                theta[(1, 0)].into(),
                theta[(1, 1)].into(),
                det.into(),
                pos.min_eigenvalue.into(),
                pos.is_positive.into(),
                residual.into(),
            ]);
        }
    }
    Ok(table)
}

pub fn lemma_table(b_grid: &Grid, tol: f64) -> Result<Table> {
    let mut table = Table::new(&["b", "eta", "eta_over_b2"]);
    for b in b_grid.values() {
        let eta = boundary::lemma_eta(b, tol)?;
        table.push(vec![b.into(), eta.into(), (eta / (b * b)).into()]);
    }
    Ok(table)
}

const SVG_SIZE: f64 = 600.0;
const SVG_EXTENT: f64 = 2.2;

fn to_px(a: f64, b: f64) -> (f64, f64) {
    let s = SVG_SIZE / (2.0 * SVG_EXTENT);
    ((a + SVG_EXTENT) * s, (SVG_EXTENT - b) * s)
}

/// Minimal SVG: axes, integer ticks with labels and one closed polyline.
pub fn render_svg(points: &[(f64, f64)]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_SIZE}" height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">"#
    );
    let (x0, y0) = to_px(-SVG_EXTENT, 0.0);
    let (x1, _) = to_px(SVG_EXTENT, 0.0);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>"#);
    let (xa, ya) = to_px(0.0, SVG_EXTENT);
    let (_, yb) = to_px(0.0, -SVG_EXTENT);
    let _ = writeln!(s, r#"<line x1="{xa}" y1="{ya}" x2="{xa}" y2="{yb}" stroke="black"/>"#);
    for t in -2..=2 {
        let t = t as f64;
        let (x, y) = to_px(t, 0.0);
        let _ = writeln!(
            s,
            r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="black"/>"#,
            y - 4.0,
            y + 4.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{}" font-size="12" text-anchor="middle">{t}</text>"#,
            y + 18.0
        );
        if t != 0.0 {
            let (x, y) = to_px(0.0, t);
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black"/>"#,
                x - 4.0,
                x + 4.0
            );
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="12" text-anchor="end">{t}</text>"#,
                x - 8.0,
                y + 4.0
            );
        }
    }
    let (ax, ay) = to_px(SVG_EXTENT, 0.0);
    let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="14">a</text>"#, ax - 14.0, ay - 8.0);
    let (bx, by) = to_px(0.0, SVG_EXTENT);
    let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="14">b</text>"#, bx + 8.0, by + 14.0);
    let coords: Vec<String> = points
        .iter()
        .map(|&(a, b)| {
            let (x, y) = to_px(a, b);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="blue" stroke-width="1.5" points="{}"/>"#,
        coords.join(" ")
    );
    s.push_str("</svg>\n");
    s
}
