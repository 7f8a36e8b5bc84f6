//! Positive metrics for the two-level model.
//!
//! With `a = cos α`, `α ∈ (0, π)`, every matrix
//!
//! ```text
//! Θ = [[1 + ξ, −cos α], [−cos α, 1 − ξ]],   ξ = sin α · sin γ,   γ ∈ [0, π/2)
//! ```
//!
//! satisfies `Θ H = Hᵀ Θ` and has `det Θ = sin²α · cos²γ > 0`. Any positive
//! multiple of `Θ` works equally well; the constructor fixes the scale to 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RealSquareMatrix;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricCandidate {
    pub theta: RealSquareMatrix,
    pub alpha: f64,
    pub gamma: f64,
    pub xi: f64,
}

impl MetricCandidate {
    pub fn determinant(&self) -> f64 {
        let t = &self.theta;
        t[(0, 0)] * t[(1, 1)] - t[(0, 1)] * t[(1, 0)]
    }

    /// `k·Θ` for `k > 0`.
    pub fn scaled(&self, k: f64) -> Result<RealSquareMatrix> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::ParameterDomain(format!("metric scale {k} must be positive")));
        }
        Ok(self.theta.scaled(k))
    }
}

pub fn build_metric(a: f64, gamma: f64) -> Result<MetricCandidate> {
    if !a.is_finite() {
        return Err(Error::ParameterDomain("a must be finite".into()));
    }
    if a.abs() >= 1.0 {
        return Err(Error::EpDegenerate { a: a.abs() });
    }
    if !(0.0..std::f64::consts::FRAC_PI_2).contains(&gamma) {
        return Err(Error::ParameterDomain(format!("gamma = {gamma} outside [0, pi/2)")));
    }
    let alpha = a.acos();
    let sin_alpha = ((1.0 - a) * (1.0 + a)).sqrt();
    let xi = sin_alpha * gamma.sin();
    let theta = RealSquareMatrix::from_rows([[1.0 + xi, -a], [-a, 1.0 - xi]]);
    Ok(MetricCandidate {
        theta,
        alpha,
        gamma,
        xi,
    })
}

/// Max-abs norm of `Θ H − Hᵀ Θ`, the inverse-free form of `H = Θ⁻¹ Hᵀ Θ`.
pub fn quasi_hermiticity_residual(h: &RealSquareMatrix, theta: &RealSquareMatrix) -> Result<f64> {
    if !theta.is_symmetric() {
        return Err(Error::Contract("metric must be symmetric".into()));
    }
    let lhs = theta.matmul(h)?;
    let rhs = h.transpose().matmul(theta)?;
    Ok(lhs.sub(&rhs)?.max_abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Positivity {
    pub is_positive: bool,
    pub min_eigenvalue: f64,
}

/// Smaller eigenvalue of a symmetric 2×2 matrix and whether it is positive.
pub fn positivity_certificate(theta: &RealSquareMatrix) -> Result<Positivity> {
    if theta.order() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: theta.order(),
        });
    }
    if !theta.is_symmetric() {
        return Err(Error::Contract("metric must be symmetric".into()));
    }
    let half_trace = 0.5 * theta.trace();
    let det = theta[(0, 0)] * theta[(1, 1)] - theta[(0, 1)] * theta[(1, 0)];
    // trace/2 ∓ √((trace/2)² − det), with the radicand written as a sum of squares
    let radius = (0.5 * (theta[(0, 0)] - theta[(1, 1)])).hypot(theta[(0, 1)]);
    let larger = half_trace + radius;
    let min_eigenvalue = if larger > 0.0 {
        det / larger
    } else {
        half_trace - radius
    };
    Ok(Positivity {
        is_positive: min_eigenvalue > 0.0,
        min_eigenvalue,
    })
}

/// `det Θ(a, γ)` along a sequence of couplings inside `(−1, 1)`.
pub fn ep_degeneration_scan(gamma: f64, a_sequence: &[f64]) -> Result<Vec<f64>> {
    a_sequence
        .iter()
        .map(|&a| build_metric(a, gamma).map(|m| m.determinant()))
        .collect()
}
