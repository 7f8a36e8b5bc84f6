//! Spectral classification of a parameter point: interior of the reality
//! domain, exceptional point, or complexified.

use serde::Serialize;

use crate::cubic::{self, RootSet};
use crate::error::{Error, Result};
use crate::matmodel::{build_hamiltonian, ModelParams};
use crate::matrix::RealSquareMatrix;

/// Pivots below this fraction of the largest entry count as zero.
pub const RANK_PIVOT_REL: f64 = 1e-9;

/// Distance, in units of the root scale, within which an eigenvalue must
/// match a repeated characteristic root.
pub const REPEATED_ROOT_REL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SpectrumClass {
    RealSimple,
    ExceptionalDouble,
    ExceptionalTriple,
    ComplexPair,
}

impl SpectrumClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SpectrumClass::RealSimple => "RealSimple",
            SpectrumClass::ExceptionalDouble => "ExceptionalDouble",
            SpectrumClass::ExceptionalTriple => "ExceptionalTriple",
            SpectrumClass::ComplexPair => "ComplexPair",
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(
            self,
            SpectrumClass::ExceptionalDouble | SpectrumClass::ExceptionalTriple
        )
    }
}

impl std::fmt::Display for SpectrumClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumClassification {
    pub class: SpectrumClass,
    pub roots: RootSet,
    pub jordan_defect: usize,
}

impl SpectrumClassification {
    /// Half-width of the discriminant band treated as zero.
    pub fn band_width(&self) -> f64 {
        self.roots.zero_band
    }
}

/// Classifies the spectrum of `H2(a)` or `H3(a, b, c)`.
///
/// Points whose discriminant falls inside the zero band are reported as
/// exceptional; the band is carried in the result.
pub fn classify(params: &ModelParams) -> Result<SpectrumClassification> {
    params.validate()?;
    let roots = match params.dimension() {
        2 => cubic::solve_quadratic(params.a),
        _ => cubic::solve_cubic(&cubic::secular_cubic(params)?),
    };
    let class = match (roots.pair.is_some(), roots.repeated().map(|r| r.multiplicity)) {
        (true, _) => SpectrumClass::ComplexPair,
        (false, None) => SpectrumClass::RealSimple,
        (false, Some(2)) => SpectrumClass::ExceptionalDouble,
        (false, Some(_)) => SpectrumClass::ExceptionalTriple,
    };
    let jordan_defect = match roots.repeated() {
        Some(r) => {
            let h = build_hamiltonian(params)?;
            jordan_defect(&h, r.value, r.multiplicity)?
        }
        None => 0,
    };
    Ok(SpectrumClassification {
        class,
        roots,
        jordan_defect,
    })
}

fn characteristic_roots(h: &RealSquareMatrix) -> Result<(RootSet, f64)> {
    let coeffs = h.characteristic_polynomial()?;
    match coeffs.as_slice() {
        [_, b1, b0] => {
            let scale = 1f64.max(b1.abs()).max(b0.abs().sqrt());
            Ok((cubic::solve_monic_quadratic(*b1, *b0), scale))
        }
        [_, b2, b1, b0] => {
            let poly = cubic::CubicPoly::new(1.0, *b2, *b1, *b0)?;
            Ok((cubic::solve_cubic(&poly), poly.root_scale()))
        }
        _ => Err(Error::UnsupportedDimension(h.order())),
    }
}

/// Algebraic minus geometric multiplicity of `eigenvalue`.
///
/// The eigenvalue must be a root of the characteristic polynomial of
/// multiplicity at least `algebraic_multiplicity` (≥ 2) within
/// `REPEATED_ROOT_REL` times the root scale. The geometric multiplicity is
/// `order − rank(H − λI)` with rank from partially pivoted elimination.
pub fn jordan_defect(h: &RealSquareMatrix, eigenvalue: f64, algebraic_multiplicity: usize) -> Result<usize> {
    let not_repeated = || Error::NotRepeated {
        eigenvalue,
        multiplicity: algebraic_multiplicity,
    };
    if algebraic_multiplicity < 2 || algebraic_multiplicity > h.order() {
        return Err(not_repeated());
    }
    let (roots, scale) = characteristic_roots(h)?;
    let matches = roots
        .real
        .iter()
        .any(|r| r.multiplicity >= algebraic_multiplicity && (r.value - eigenvalue).abs() <= REPEATED_ROOT_REL * scale);
    if !matches {
        return Err(not_repeated());
    }
    let geometric = h.order() - h.shifted(eigenvalue).rank(RANK_PIVOT_REL);
    algebraic_multiplicity
        .checked_sub(geometric)
        .ok_or_else(|| Error::Contract(format!("geometric multiplicity {geometric} exceeds algebraic")))
}
