//! The two- and three-state PT-symmetric Hamiltonians and their parities.
//!
//! ```text
//!        ( -1  a )            ( -1   a   0  )
//! H2 =   ( -a  1 )     H3 =   ( -a   1   b  )
//!                             (  0  -b  3+c )
//! ```
//!
//! with parities `diag(1, -1)` and `diag(1, -1, 1)`. Both satisfy
//! `Hᵀ P = P H`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RealSquareMatrix;

/// Couplings of the two- or three-state model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelParams {
    dimension: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl ModelParams {
    /// Validated constructor; see [`ModelParams::validate`].
    pub fn new(dimension: usize, a: f64, b: f64, c: f64) -> Result<Self> {
        let p = Self { dimension, a, b, c };
        p.validate()?;
        Ok(p)
    }

    pub fn two_level(a: f64) -> Result<Self> {
        Self::new(2, a, 0.0, 0.0)
    }

    pub fn three_level(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(3, a, b, c)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn validate(&self) -> Result<()> {
        if self.dimension != 2 && self.dimension != 3 {
            return Err(Error::UnsupportedDimension(self.dimension));
        }
        if ![self.a, self.b, self.c].iter().all(|x| x.is_finite()) {
            return Err(Error::ParameterDomain("couplings must be finite".into()));
        }
        if self.dimension == 2 && (self.b != 0.0 || self.c != 0.0) {
            return Err(Error::ParameterDomain(
                "the two-level model has no b or c: both must be 0".into(),
            ));
        }
        if self.dimension == 3 {
            check_shift(self.c)?;
        }
        Ok(())
    }
}

/// Rejects the shifts c = -2 and c = -4.
pub(crate) fn check_shift(c: f64) -> Result<()> {
    if !c.is_finite() {
        return Err(Error::ParameterDomain("c must be finite".into()));
    }
    if c == -2.0 || c == -4.0 {
        return Err(Error::ParameterDomain(format!(
            "c = {c} is excluded: the observer level 3+c would coincide with the diagonal entry {}",
            3.0 + c
        )));
    }
    Ok(())
}

/// Diagonal ±1 indefinite metric.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityMatrix {
    matrix: RealSquareMatrix,
}

impl ParityMatrix {
    pub fn matrix(&self) -> &RealSquareMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn signs(&self) -> Vec<f64> {
        (0..self.order()).map(|i| self.matrix[(i, i)]).collect()
    }
}

pub fn build_hamiltonian(params: &ModelParams) -> Result<RealSquareMatrix> {
    params.validate()?;
    let ModelParams { a, b, c, .. } = *params;
    Ok(match params.dimension {
        2 => RealSquareMatrix::from_rows([[-1.0, a], [-a, 1.0]]),
        _ => RealSquareMatrix::from_rows([[-1.0, a, 0.0], [-a, 1.0, b], [0.0, -b, 3.0 + c]]),
    })
}

pub fn build_parity(dimension: usize) -> Result<ParityMatrix> {
    let signs: &[f64] = match dimension {
        2 => &[1.0, -1.0],
        3 => &[1.0, -1.0, 1.0],
        n => return Err(Error::UnsupportedDimension(n)),
    };
    Ok(ParityMatrix {
        matrix: RealSquareMatrix::diagonal(signs),
    })
}

/// Max-abs norm of `Hᵀ P - P H`.
pub fn pseudo_hermiticity_residual(h: &RealSquareMatrix, parity: &ParityMatrix) -> Result<f64> {
    let p = parity.matrix();
    let lhs = h.transpose().matmul(p)?;
    let rhs = p.matmul(h)?;
    Ok(lhs.sub(&rhs)?.max_abs())
}
