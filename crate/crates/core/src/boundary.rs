//! The boundary of the reality domain of `H3` in the `(a, b)` plane.
//!
//! At `c = 0` the boundary has the closed form
//!
//! ```text
//! a = ±√((4 − 3β² − β³)/2),   b = ±√((4 − 3β² + β³)/2),   β ∈ [−1, 1]
//! ```
//!
//! where the exceptional spectrum is `{z, z, y}` with `z = 1 + β` and
//! `y = 1 − 2β`. For any admissible `c` the boundary is found numerically
//! by bisecting the sign change of the secular discriminant along rays
//! from the origin.

use serde::Serialize;

use crate::cubic::{cubic_discriminant, secular_cubic, solve_cubic, CubicPoly};
use crate::error::{Error, Result};
use crate::matmodel::{check_shift, ModelParams};

/// Radial step used to bracket the first sign change.
pub const BRACKET_STEP: f64 = 0.05;
/// Largest radius searched along a ray.
pub const MAX_RADIUS: f64 = 8.0;
/// Smallest accepted bisection tolerance.
pub const MIN_TOL: f64 = 1e-14;
/// Distance kept from `β = ±1` by interior sweeps.
pub const INTERIOR_BETA_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "parametric")]
    Parametric,
    #[serde(rename = "bisect")]
    Bisection,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Parametric => "parametric",
            Method::Bisection => "bisect",
        }
    }
}

/// Sign quadrant of `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quadrant {
    PlusPlus,
    MinusPlus,
    MinusMinus,
    PlusMinus,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [
        Quadrant::PlusPlus,
        Quadrant::MinusPlus,
        Quadrant::MinusMinus,
        Quadrant::PlusMinus,
    ];

    pub fn signs(&self) -> (f64, f64) {
        match self {
            Quadrant::PlusPlus => (1.0, 1.0),
            Quadrant::MinusPlus => (-1.0, 1.0),
            Quadrant::MinusMinus => (-1.0, -1.0),
            Quadrant::PlusMinus => (1.0, -1.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub a: f64,
    pub b: f64,
    /// Curve parameter, known only for closed-form points.
    pub beta: Option<f64>,
    pub double_root_z: f64,
    pub single_root_y: f64,
}

impl BoundaryPoint {
    pub fn radius(&self) -> f64 {
        self.a.hypot(self.b)
    }

    pub fn angle(&self) -> f64 {
        self.b.atan2(self.a).rem_euclid(std::f64::consts::TAU)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryCurve {
    pub points: Vec<BoundaryPoint>,
    pub method: Method,
    pub c: f64,
    /// Generating parameter of each point: β for parametric arcs, the ray
    /// angle for bisection curves.
    pub parameters: Vec<f64>,
}

/// Closed-form boundary point at `c = 0`. `β = ±1` are admitted as the
/// limits `(±1, 0)` and `(0, ±1)`.
pub fn parametric_boundary(beta: f64, quadrant: Quadrant) -> Result<BoundaryPoint> {
    if !(-1.0..=1.0).contains(&beta) {
        return Err(Error::ParameterDomain(format!("beta = {beta} lies outside [-1, 1]")));
    }
    let (sa, sb) = quadrant.signs();
    let b2 = beta * beta;
    let b3 = b2 * beta;
    let a = sa * ((4.0 - 3.0 * b2 - b3) / 2.0).max(0.0).sqrt();
    let b = sb * ((4.0 - 3.0 * b2 + b3) / 2.0).max(0.0).sqrt();
    Ok(BoundaryPoint {
        a,
        b,
        beta: Some(beta),
        double_root_z: 1.0 + beta,
        single_root_y: 1.0 - 2.0 * beta,
    })
}

/// One quadrant arc of the closed-form boundary, `samples` points with β
/// ascending over `[−1 + margin, 1 − margin]`.
pub fn parametric_arc(quadrant: Quadrant, samples: usize, margin: f64) -> Result<BoundaryCurve> {
    if samples < 2 {
        return Err(Error::ParameterDomain("an arc needs at least 2 samples".into()));
    }
    if !(0.0..1.0).contains(&margin) {
        return Err(Error::ParameterDomain(format!("beta margin {margin} outside [0, 1)")));
    }
    let lo = -1.0 + margin;
    let hi = 1.0 - margin;
    let parameters: Vec<f64> = (0..samples)
        .map(|i| lo + (hi - lo) * i as f64 / (samples - 1) as f64)
        .collect();
    let points = parameters
        .iter()
        .map(|&beta| parametric_boundary(beta, quadrant))
        .collect::<Result<_>>()?;
    Ok(BoundaryCurve {
        points,
        method: Method::Parametric,
        c: 0.0,
        parameters,
    })
}

fn ray_cubic(theta: f64, r: f64, c: f64) -> Result<CubicPoly> {
    secular_cubic(&ModelParams::three_level(r * theta.cos(), r * theta.sin(), c)?)
}

fn interior(poly: &CubicPoly) -> bool {
    cubic_discriminant(poly) > 0.0
}

/// Splits the spectrum at a boundary crossing into the merging pair `z` and
/// the remaining level `y`.
fn merging_roots(poly: &CubicPoly) -> (f64, f64) {
    let roots = solve_cubic(poly);
    if let Some(pair) = roots.pair {
        return (pair.re, roots.real[0].value);
    }
    if let Some(rep) = roots.repeated() {
        let other = roots
            .real
            .iter()
            .find(|r| r.multiplicity == 1)
            .map_or(rep.value, |r| r.value);
        return (rep.value, other);
    }
    let r = roots.real_roots();
    if r[1] - r[0] <= r[2] - r[1] {
        (0.5 * (r[0] + r[1]), r[2])
    } else {
        (0.5 * (r[1] + r[2]), r[0])
    }
}

/// Radius at which the ray `(a, b) = r·(cos θ, sin θ)` leaves the reality
/// domain.
///
/// Steps outward from the origin by [`BRACKET_STEP`] until the
/// discriminant stops being positive, then bisects on its sign until the
/// bracket is narrower than `tol`.
pub fn boundary_radius(theta: f64, c: f64, tol: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::ParameterDomain("ray angle must be finite".into()));
    }
    if tol.is_nan() || tol < MIN_TOL {
        return Err(Error::ParameterDomain(format!("tolerance {tol} below {MIN_TOL}")));
    }
    check_shift(c)?;
    let no_boundary = || Error::NoBoundaryOnRay {
        theta,
        c,
        r_max: MAX_RADIUS,
    };
    if !interior(&ray_cubic(theta, 0.0, c)?) {
        return Err(no_boundary());
    }
    let steps = (MAX_RADIUS / BRACKET_STEP).round() as usize;
    let mut hi = None;
    for k in 1..=steps {
        let r = k as f64 * BRACKET_STEP;
        if !interior(&ray_cubic(theta, r, c)?) {
            hi = Some(r);
            break;
        }
    }
    let mut hi = hi.ok_or_else(no_boundary)?;
    let mut lo = hi - BRACKET_STEP;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if interior(&ray_cubic(theta, mid, c)?) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Boundary point on the ray of angle `theta` (normalised to `[0, 2π)`).
pub fn bisect_boundary(theta: f64, c: f64, tol: f64) -> Result<BoundaryPoint> {
    let theta = theta.rem_euclid(std::f64::consts::TAU);
    let r = boundary_radius(theta, c, tol)?;
    let (a, b) = (r * theta.cos(), r * theta.sin());
    let (z, y) = merging_roots(&secular_cubic(&ModelParams::three_level(a, b, c)?)?);
    Ok(BoundaryPoint {
        a,
        b,
        beta: None,
        double_root_z: z,
        single_root_y: y,
    })
}

/// Boundary sampled on `rays` equally spaced angles, ascending from 0.
pub fn bisect_curve(rays: usize, c: f64, tol: f64) -> Result<BoundaryCurve> {
    if rays < 1 {
        return Err(Error::ParameterDomain("at least one ray is required".into()));
    }
    let parameters: Vec<f64> = (0..rays)
        .map(|k| std::f64::consts::TAU * k as f64 / rays as f64)
        .collect();
    let points = parameters
        .iter()
        .map(|&t| bisect_boundary(t, c, tol))
        .collect::<Result<_>>()?;
    Ok(BoundaryCurve {
        points,
        method: Method::Bisection,
        c,
        parameters,
    })
}

/// Doubly exceptional point: all three levels merge at `z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DepPoint {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

fn dep_quad(c: f64, a2: f64, b2: f64, z: f64) -> Result<[DepPoint; 4]> {
    if a2 < 0.0 || b2 < 0.0 {
        return Err(Error::NoRealDep {
            c,
            detail: format!("a² = {a2}, b² = {b2}"),
        });
    }
    let (a, b) = (a2.sqrt(), b2.sqrt());
    Ok(Quadrant::ALL.map(|q| {
        let (sa, sb) = q.signs();
        DepPoint {
            a: sa * a,
            b: sb * b,
            c,
            z,
        }
    }))
}

/// The four couplings at which the secular cubic becomes `−(E − z)³`.
///
/// Matching the `E²` coefficient gives `z = 1 + c/3`; matching the linear
/// and constant terms gives
///
/// ```text
/// a² = 1 + z²(3 + z)/(4 + c),     b² = 1 + 3z² − a²
/// ```
///
/// which is `a² = b² = 2` at `c = 0`.
pub fn dep_points(c: f64) -> Result<[DepPoint; 4]> {
    check_shift(c)?;
    let z = 1.0 + c / 3.0;
    let a2 = 1.0 + z * z * (3.0 + z) / (4.0 + c);
    let b2 = 1.0 + 3.0 * z * z - a2;
    dep_quad(c, a2, b2, z)
}

/// Couplings from `a² = 2 − c/(4+c)`, `b² = 4 − a²`, `z = 1 + c/3`.
///
/// This pair solves the linear-coefficient condition with the unshifted
/// energy `z = 1` (`a² + b² = 4`) together with the constant-term
/// condition at `z = 1`. It agrees with [`dep_points`] only at `c = 0`;
/// for `c ≠ 0` the secular cubic there is not a perfect cube.
pub fn unit_energy_dep_relation(c: f64) -> Result<[DepPoint; 4]> {
    check_shift(c)?;
    let a2 = 2.0 - c / (4.0 + c);
    dep_quad(c, a2, 4.0 - a2, 1.0 + c / 3.0)
}

/// Growth `η(b) = a_EP(b) − 1` of the reality interval in `a` at fixed
/// `b` and `c = 0`.
///
/// `a_EP` is the outermost interior-to-exterior transition of the
/// discriminant on `a ∈ [0, 2]`, located on a 0.01 grid and refined by
/// bisection to `tol`.
pub fn lemma_eta(b: f64, tol: f64) -> Result<f64> {
    if !(b.is_finite() && b != 0.0 && b.abs() < std::f64::consts::SQRT_2) {
        return Err(Error::OutsideLemmaRegime { b });
    }
    if tol.is_nan() || tol < MIN_TOL {
        return Err(Error::ParameterDomain(format!("tolerance {tol} below {MIN_TOL}")));
    }
    let inside = |a: f64| -> Result<bool> { Ok(interior(&secular_cubic(&ModelParams::three_level(a, b, 0.0)?)?)) };
    const STEP: f64 = 0.01;
    const STEPS: usize = 200;
    let mut bracket = None;
    let mut prev = inside(0.0)?;
    for k in 1..=STEPS {
        let a = k as f64 * STEP;
        let cur = inside(a)?;
        if prev && !cur {
            bracket = Some((a - STEP, a));
        }
        prev = cur;
    }
    let (mut lo, mut hi) = bracket.ok_or(Error::OutsideLemmaRegime { b })?;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if inside(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi) - 1.0)
}

/// Deviations `(|a − 1 − 3ε²/4|, |b − 3ε/√2|)` of the closed-form boundary
/// at `β = −1 + ε²` from its leading small-ε behaviour near `(1, 0)`.
pub fn epsilon_expansion_check(epsilon: f64) -> Result<(f64, f64)> {
    if !(epsilon > 0.0 && epsilon <= 0.1) {
        return Err(Error::ParameterDomain(format!("epsilon = {epsilon} outside (0, 0.1]")));
    }
    let p = parametric_boundary(-1.0 + epsilon * epsilon, Quadrant::PlusPlus)?;
    let a_err = (p.a - 1.0 - 0.75 * epsilon * epsilon).abs();
    let b_err = (p.b - 3.0 * epsilon / std::f64::consts::SQRT_2).abs();
    Ok((a_err, b_err))
}
