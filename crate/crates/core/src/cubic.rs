//! Real quadratic and cubic root solving with discriminant classification.
//!
//! Cubics are reduced to the depressed form `t³ + p t + q` (with
//! `E = t - b₂/3` after dividing by the leading coefficient). The
//! discriminant, the three-real-root trigonometric branch, the
//! one-real-root Cardano branch and the repeated-root formulas all work
//! from `(p, q)`.
//!
//! A discriminant is treated as zero when `|Δ| ≤ 1e-10 · S⁴ · c₃⁴`, with
//! `S = max(1, |b₂|, |b₁|^½, |b₀|^⅓)` taken over the monic coefficients.
//! Real roots are reported in ascending order; no level labels are
//! attached.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matmodel::ModelParams;

/// Relative width of the band in which a discriminant counts as zero.
pub const DISCRIMINANT_ZERO_REL: f64 = 1e-10;

/// `c3·E³ + c2·E² + c1·E + c0` with `c3 ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CubicPoly {
    c3: f64,
    c2: f64,
    c1: f64,
    c0: f64,
}

/// `t³ + p t + q` with `E = t + shift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Depressed {
    pub shift: f64,
    pub p: f64,
    pub q: f64,
}

impl CubicPoly {
    pub fn new(c3: f64, c2: f64, c1: f64, c0: f64) -> Result<Self> {
        if ![c3, c2, c1, c0].iter().all(|x| x.is_finite()) {
            return Err(Error::ParameterDomain("cubic coefficients must be finite".into()));
        }
        if c3 == 0.0 {
            return Err(Error::ParameterDomain("leading cubic coefficient is zero".into()));
        }
        Ok(Self { c3, c2, c1, c0 })
    }

    /// Monic cubic with the given roots.
    pub fn from_roots(r: [f64; 3]) -> Self {
        let c2 = -(r[0] + r[1] + r[2]);
        let c1 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
        let c0 = -r[0] * r[1] * r[2];
        Self { c3: 1.0, c2, c1, c0 }
    }

    /// `[c3, c2, c1, c0]`
    pub fn coefficients(&self) -> [f64; 4] {
        [self.c3, self.c2, self.c1, self.c0]
    }

    pub fn eval(&self, e: f64) -> f64 {
        ((self.c3 * e + self.c2) * e + self.c1) * e + self.c0
    }

    pub fn derivative_at(&self, e: f64) -> f64 {
        (3.0 * self.c3 * e + 2.0 * self.c2) * e + self.c1
    }

    /// `[b2, b1, b0]` of the monic polynomial.
    pub fn monic(&self) -> [f64; 3] {
        [self.c2 / self.c3, self.c1 / self.c3, self.c0 / self.c3]
    }

    pub fn depressed(&self) -> Depressed {
        let [b2, b1, b0] = self.monic();
        Depressed {
            shift: -b2 / 3.0,
            p: b1 - b2 * b2 / 3.0,
            q: 2.0 * b2 * b2 * b2 / 27.0 - b2 * b1 / 3.0 + b0,
        }
    }

    /// `S = max(1, |b2|, |b1|^(1/2), |b0|^(1/3))`
    pub fn root_scale(&self) -> f64 {
        let [b2, b1, b0] = self.monic();
        1f64.max(b2.abs()).max(b1.abs().sqrt()).max(b0.abs().cbrt())
    }

    /// Half-width of the band around zero in which [`cubic_discriminant`]
    /// is classified as vanishing.
    pub fn zero_band(&self) -> f64 {
        DISCRIMINANT_ZERO_REL * self.root_scale().powi(4) * self.c3.powi(4)
    }

    /// Largest coefficient magnitude, floored at 1.
    pub fn coefficient_scale(&self) -> f64 {
        self.coefficients().iter().fold(1f64, |m, c| m.max(c.abs()))
    }
}

/// Secular polynomial `det(H3 - E·I)`:
/// `-E³ + (3+c)E² + (1-a²-b²)E - 3 + 3a² - c + c·a² - b²`.
pub fn secular_cubic(params: &ModelParams) -> Result<CubicPoly> {
    params.validate()?;
    if params.dimension() != 3 {
        return Err(Error::UnsupportedDimension(params.dimension()));
    }
    let ModelParams { a, b, c, .. } = *params;
    let (a2, b2) = (a * a, b * b);
    CubicPoly::new(-1.0, 3.0 + c, 1.0 - a2 - b2, -3.0 + 3.0 * a2 - c + c * a2 - b2)
}

/// Discriminant `18·c3·c2·c1·c0 − 4·c2³·c0 + c2²·c1² − 4·c3·c1³ − 27·c3²·c0²`.
///
/// Evaluated as `c3⁴·(−4p³ − 27q²)` on the depressed form; the expanded sum
/// cancels catastrophically next to a triple root.
pub fn cubic_discriminant(poly: &CubicPoly) -> f64 {
    let Depressed { p, q, .. } = poly.depressed();
    poly.c3.powi(4) * (-4.0 * p * p * p - 27.0 * q * q)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: usize,
}

/// `re ± i·im`, `im > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConjugatePair {
    pub re: f64,
    pub im: f64,
}

/// Roots of a real quadratic or cubic.
///
/// Distinct real roots are sorted ascending with multiplicities; a
/// complex-conjugate pair, if any, is kept separately. `discriminant` is
/// the raw value and `zero_band` the half-width inside which it was
/// classified as zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSet {
    pub degree: usize,
    pub real: Vec<RealRoot>,
    pub pair: Option<ConjugatePair>,
    pub discriminant: f64,
    pub zero_band: f64,
}

impl RootSet {
    fn new(degree: usize, mut real: Vec<RealRoot>, pair: Option<ConjugatePair>, disc: f64, band: f64) -> Self {
        real.sort_by(|x, y| x.value.total_cmp(&y.value));
        Self {
            degree,
            real,
            pair,
            discriminant: disc,
            zero_band: band,
        }
    }

    /// Real roots repeated according to multiplicity, ascending.
    pub fn real_roots(&self) -> Vec<f64> {
        self.real
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
            .collect()
    }

    /// All roots as `(re, im)`; the pair contributes both signs of `im`.
    pub fn complex_roots(&self) -> Vec<(f64, f64)> {
        let mut out: Vec<(f64, f64)> = self.real_roots().into_iter().map(|r| (r, 0.0)).collect();
        if let Some(ConjugatePair { re, im }) = self.pair {
            out.push((re, -im));
            out.push((re, im));
        }
        out
    }

    pub fn total_multiplicity(&self) -> usize {
        self.real.iter().map(|r| r.multiplicity).sum::<usize>() + 2 * self.pair.is_some() as usize
    }

    pub fn is_all_real(&self) -> bool {
        self.pair.is_none()
    }

    /// The real root of highest multiplicity when it is at least 2.
    pub fn repeated(&self) -> Option<RealRoot> {
        self.real
            .iter()
            .copied()
            .filter(|r| r.multiplicity >= 2)
            .max_by_key(|r| r.multiplicity)
    }

    /// Coefficients of the monic polynomial `∏(E − rᵢ)`, highest degree first.
    pub fn monic_coefficients(&self) -> Vec<f64> {
        let mut poly = vec![1.0];
        let mul = |poly: &Vec<f64>, factor: &[f64]| {
            let mut out = vec![0.0; poly.len() + factor.len() - 1];
            for (i, x) in poly.iter().enumerate() {
                for (j, y) in factor.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        };
        for r in self.real_roots() {
            poly = mul(&poly, &[1.0, -r]);
        }
        if let Some(ConjugatePair { re, im }) = self.pair {
            poly = mul(&poly, &[1.0, -2.0 * re, re * re + im * im]);
        }
        poly
    }
}

/// Eigenvalues `±√(1 − a²)` of the two-level model, i.e. roots of
/// `E² + a² − 1`. Exact comparisons of `|a|` with 1 select the branch.
pub fn solve_quadratic(a: f64) -> RootSet {
    let disc = 4.0 * (1.0 - a) * (1.0 + a);
    let abs = a.abs();
    if abs < 1.0 {
        let e = ((1.0 - abs) * (1.0 + abs)).sqrt();
        RootSet::new(
            2,
            vec![
                RealRoot {
                    value: -e,
                    multiplicity: 1,
                },
                RealRoot {
                    value: e,
                    multiplicity: 1,
                },
            ],
            None,
            disc,
            0.0,
        )
    } else if abs == 1.0 {
        RootSet::new(
            2,
            vec![RealRoot {
                value: 0.0,
                multiplicity: 2,
            }],
            None,
            0.0,
            0.0,
        )
    } else {
        let im = ((abs - 1.0) * (abs + 1.0)).sqrt();
        RootSet::new(2, vec![], Some(ConjugatePair { re: 0.0, im }), disc, 0.0)
    }
}

/// Roots of the monic quadratic `E² + b1·E + b0`, zero band `1e-10·S²`
/// with `S = max(1, |b1|, |b0|^½)`.
pub fn solve_monic_quadratic(b1: f64, b0: f64) -> RootSet {
    let disc = b1 * b1 - 4.0 * b0;
    let scale = 1f64.max(b1.abs()).max(b0.abs().sqrt());
    let band = DISCRIMINANT_ZERO_REL * scale * scale;
    if disc.abs() <= band {
        RootSet::new(
            2,
            vec![RealRoot {
                value: -b1 / 2.0,
                multiplicity: 2,
            }],
            None,
            disc,
            band,
        )
    } else if disc > 0.0 {
        let big = -0.5 * (b1 + disc.sqrt().copysign(b1));
        let small = if big != 0.0 { b0 / big } else { 0.0 };
        RootSet::new(
            2,
            vec![
                RealRoot {
                    value: big,
                    multiplicity: 1,
                },
                RealRoot {
                    value: small,
                    multiplicity: 1,
                },
            ],
            None,
            disc,
            band,
        )
    } else {
        let pair = ConjugatePair {
            re: -b1 / 2.0,
            im: (-disc).sqrt() / 2.0,
        };
        RootSet::new(2, vec![], Some(pair), disc, band)
    }
}

fn polish(poly: &CubicPoly, mut root: f64) -> f64 {
    let mut resid = poly.eval(root).abs();
    for _ in 0..3 {
        let d = poly.derivative_at(root);
        if d == 0.0 || resid == 0.0 {
            break;
        }
        let next = root - poly.eval(root) / d;
        let next_resid = poly.eval(next).abs();
        if next_resid < resid {
            root = next;
            resid = next_resid;
        } else {
            break;
        }
    }
    root
}

/// All roots of a real cubic, classified by the discriminant.
///
/// * `|Δ|` inside the zero band: a repeated root. When both `4|p|³` and
///   `27q²` are inside the band the roots merge into a triple root at the
///   shift; otherwise the double root is `shift − 3q/(2p)` and the simple
///   one `shift + 3q/p`.
/// * `Δ > 0`: three distinct reals from the trigonometric formula.
/// * `Δ < 0`: one real root from Cardano's formula and a conjugate pair
///   from deflation.
pub fn solve_cubic(poly: &CubicPoly) -> RootSet {
    let Depressed { shift, p, q } = poly.depressed();
    let disc_monic = -4.0 * p * p * p - 27.0 * q * q;
    let scale = poly.root_scale();
    let band_monic = DISCRIMINANT_ZERO_REL * scale.powi(4);
    let lead4 = poly.c3.powi(4);
    let (disc, band) = (lead4 * disc_monic, lead4 * band_monic);

    if disc_monic.abs() <= band_monic {
        let real = if 4.0 * (p * p * p).abs() <= band_monic && 27.0 * q * q <= band_monic {
            vec![RealRoot {
                value: shift,
                multiplicity: 3,
            }]
        } else {
            vec![
                RealRoot {
                    value: shift - 1.5 * q / p,
                    multiplicity: 2,
                },
                RealRoot {
                    value: shift + 3.0 * q / p,
                    multiplicity: 1,
                },
            ]
        };
        return RootSet::new(3, real, None, disc, band);
    }

    if disc_monic > 0.0 {
        // p < 0 here
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (1.5 * q / p * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        let real = (0..3)
            .map(|k| {
                let t = m * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
                RealRoot {
                    value: polish(poly, t + shift),
                    multiplicity: 1,
                }
            })
            .collect();
        return RootSet::new(3, real, None, disc, band);
    }

    let d = q * q / 4.0 + p * p * p / 27.0;
    let u = -(0.5 * q.abs() + d.sqrt()).cbrt().copysign(q);
    let v = if u != 0.0 { -p / (3.0 * u) } else { 0.0 };
    let r = polish(poly, u + v + shift);
    let [b2, b1, b0] = poly.monic();
    let lin = b2 + r;
    let constant = if r.abs() > 1.0 { -b0 / r } else { b1 + r * lin };
    let im2 = constant - lin * lin / 4.0;
    let im = if im2 > 0.0 {
        im2.sqrt()
    } else {
        0.5 * 3f64.sqrt() * (u - v).abs()
    };
    RootSet::new(
        3,
        vec![RealRoot {
            value: r,
            multiplicity: 1,
        }],
        Some(ConjugatePair { re: -lin / 2.0, im }),
        disc,
        band,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn expanded_discriminant(p: &CubicPoly) -> f64 {
        let [c3, c2, c1, c0] = p.coefficients();
        18.0 * c3 * c2 * c1 * c0 - 4.0 * c2.powi(3) * c0 + c2 * c2 * c1 * c1
            - 4.0 * c3 * c1.powi(3)
            - 27.0 * c3 * c3 * c0 * c0
    }

    fn residual_ok(poly: &CubicPoly, roots: &RootSet) {
        for r in roots.real_roots() {
            assert!(
                poly.eval(r).abs() <= 1e-12 * poly.coefficient_scale(),
                "residual {} at {r}",
                poly.eval(r)
            );
        }
    }

    #[test]
    fn rejects_zero_leading_coefficient() {
        assert!(CubicPoly::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(CubicPoly::new(1.0, f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn secular_at_origin() {
        let p = secular_cubic(&ModelParams::three_level(0.0, 0.0, 0.0).unwrap()).unwrap();
        assert_eq!(p.coefficients(), [-1.0, 3.0, 1.0, -3.0]);
        let roots = solve_cubic(&p);
        assert_eq!(roots.real_roots().len(), 3);
        for (got, want) in roots.real_roots().iter().zip([-1.0, 1.0, 3.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        residual_ok(&p, &roots);
    }

    #[test]
    fn secular_at_dep_is_minus_cube() {
        let s = 2f64.sqrt();
        let p = secular_cubic(&ModelParams::three_level(s, s, 0.0).unwrap()).unwrap();
        for (got, want) in p.coefficients().iter().zip([-1.0, 3.0, -3.0, 1.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        let roots = solve_cubic(&p);
        assert_eq!(
            roots.real,
            vec![RealRoot {
                value: 1.0,
                multiplicity: 3
            }]
        );
    }

    #[test]
    fn secular_with_shift() {
        let p = secular_cubic(&ModelParams::three_level(1.0, 1.0, 1.0).unwrap()).unwrap();
        assert_eq!(p.coefficients(), [-1.0, 4.0, -1.0, -1.0]);
    }

    #[test]
    fn secular_needs_three_levels() {
        let two = ModelParams::two_level(0.5).unwrap();
        assert_eq!(secular_cubic(&two), Err(Error::UnsupportedDimension(2)));
    }

    #[test]
    fn quadratic_branches() {
        assert_eq!(solve_quadratic(0.0).real_roots(), vec![-1.0, 1.0]);
        assert_eq!(
            solve_quadratic(1.0).real,
            vec![RealRoot {
                value: 0.0,
                multiplicity: 2
            }]
        );
        assert_eq!(solve_quadratic(-1.0).real_roots(), vec![0.0, 0.0]);
        let r = solve_quadratic(0.6).real_roots();
        assert_abs_diff_eq!(r[0], -0.8, epsilon = 1e-15);
        assert_abs_diff_eq!(r[1], 0.8, epsilon = 1e-15);
        let c = solve_quadratic(1.25);
        assert!(c.real.is_empty());
        let pair = c.pair.unwrap();
        assert_eq!(pair.re, 0.0);
        assert_abs_diff_eq!(pair.im, 0.75, epsilon = 1e-15);
        assert!(c.discriminant < 0.0);
    }

    #[test]
    fn monic_quadratic() {
        let r = solve_monic_quadratic(-2.0, 1.0);
        assert_eq!(
            r.real,
            vec![RealRoot {
                value: 1.0,
                multiplicity: 2
            }]
        );
        let r = solve_monic_quadratic(-3.0, 2.0);
        assert_eq!(r.real_roots(), vec![1.0, 2.0]);
        let r = solve_monic_quadratic(0.0, 1.0);
        assert_eq!(r.pair, Some(ConjugatePair { re: 0.0, im: 1.0 }));
    }

    #[test]
    fn discriminant_values() {
        let p = CubicPoly::new(-1.0, 3.0, 1.0, -3.0).unwrap();
        // (2·4·2)² for roots -1, 1, 3
        assert_abs_diff_eq!(cubic_discriminant(&p), 256.0, epsilon = 1e-11);
        assert_abs_diff_eq!(expanded_discriminant(&p), 256.0, epsilon = 1e-11);

        let triple = CubicPoly::new(-1.0, 3.0, -3.0, 1.0).unwrap();
        assert_eq!(cubic_discriminant(&triple), 0.0);

        let pair = CubicPoly::new(1.0, 0.0, 1.0, 0.0).unwrap();
        assert_abs_diff_eq!(cubic_discriminant(&pair), -4.0, epsilon = 1e-15);
    }

    #[test]
    fn discriminant_matches_expanded_form() {
        let polys = [
            [2.0, -3.0, 0.5, 7.0],
            [-0.5, 1.0, 4.0, -2.0],
            [3.0, 0.0, -9.0, 1.0],
            [1.0, 6.0, 12.0, 8.0],
        ];
        for [c3, c2, c1, c0] in polys {
            let p = CubicPoly::new(c3, c2, c1, c0).unwrap();
            let e = expanded_discriminant(&p);
            assert_abs_diff_eq!(cubic_discriminant(&p), e, epsilon = 1e-10 * e.abs().max(1.0));
        }
    }

    #[test]
    fn three_distinct_real_roots() {
        let s = ModelParams::three_level(0.5, 0.5, 0.0).unwrap();
        let p = secular_cubic(&s).unwrap();
        let roots = solve_cubic(&p);
        assert!(cubic_discriminant(&p) > p.zero_band());
        assert_eq!(roots.real.len(), 3);
        assert!(roots.real.iter().all(|r| r.multiplicity == 1));
        residual_ok(&p, &roots);
    }

    #[test]
    fn one_real_and_pair() {
        // (E - 2)(E² + 2E + 5): roots 2, -1 ± 2i
        let p = CubicPoly::new(1.0, 0.0, 1.0, -10.0).unwrap();
        let roots = solve_cubic(&p);
        assert_eq!(roots.real.len(), 1);
        assert_abs_diff_eq!(roots.real[0].value, 2.0, epsilon = 1e-14);
        let pair = roots.pair.unwrap();
        assert_abs_diff_eq!(pair.re, -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(pair.im, 2.0, epsilon = 1e-14);
        assert_eq!(roots.total_multiplicity(), 3);
    }

    #[test]
    fn double_root_from_gcd_formula() {
        // -(E - 0.5)²(E - 2)
        let p = CubicPoly::new(-1.0, 3.0, -2.25, 0.5).unwrap();
        let roots = solve_cubic(&p);
        assert_eq!(roots.real.len(), 2);
        assert_abs_diff_eq!(roots.real[0].value, 0.5, epsilon = 1e-14);
        assert_eq!(roots.real[0].multiplicity, 2);
        assert_abs_diff_eq!(roots.real[1].value, 2.0, epsilon = 1e-14);
        assert_eq!(roots.repeated().unwrap().multiplicity, 2);
        residual_ok(&p, &roots);
    }

    #[test]
    fn scaled_polynomials_classify_alike() {
        // same roots {1, 1, 4} at very different coefficient magnitudes
        for k in [1e-6, 1.0, 1e6] {
            let p = CubicPoly::new(k, -6.0 * k, 9.0 * k, -4.0 * k).unwrap();
            let r = solve_cubic(&p);
            assert_eq!(r.repeated().map(|x| x.multiplicity), Some(2), "k = {k}");
        }
    }

    #[test]
    fn roots_are_sorted() {
        let p = CubicPoly::from_roots([5.0, -2.0, 0.25]);
        let r = solve_cubic(&p).real_roots();
        assert!(r.windows(2).all(|w| w[0] < w[1]));
    }
}
