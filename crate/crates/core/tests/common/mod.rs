#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use quasiherm::cubic::RootSet;
use quasiherm::RealSquareMatrix;

pub fn to_nalgebra(m: &RealSquareMatrix) -> DMatrix<f64> {
    let n = m.order();
    DMatrix::from_row_slice(n, n, m.entries())
}

/// Eigenvalues from nalgebra's real Schur decomposition, as (re, im).
pub fn oracle_eigenvalues(m: &RealSquareMatrix) -> Vec<(f64, f64)> {
    to_nalgebra(m)
        .complex_eigenvalues()
        .iter()
        .map(|z| (z.re, z.im))
        .collect()
}

/// Coefficients `[c3, c2, c1, c0]` of `det(H − E·I)` recovered by
/// interpolating LU determinants at four energies.
pub fn oracle_secular_coefficients(h: &RealSquareMatrix) -> [f64; 4] {
    let base = to_nalgebra(h);
    let nodes: [f64; 4] = [-2.0, -0.5, 1.0, 2.5];
    let vander = DMatrix::from_fn(4, 4, |i, j| nodes[i].powi(3 - j as i32));
    let values = DVector::from_iterator(
        4,
        nodes
            .iter()
            .map(|&e| (&base - DMatrix::identity(3, 3) * e).determinant()),
    );
    let c = vander.lu().solve(&values).expect("distinct nodes");
    [c[0], c[1], c[2], c[3]]
}

/// Largest distance between the roots and the oracle eigenvalues under a
/// greedy nearest matching.
pub fn match_distance(roots: &RootSet, eig: &[(f64, f64)]) -> f64 {
    let mut pool: Vec<(f64, f64)> = eig.to_vec();
    let mut worst: f64 = 0.0;
    for (re, im) in roots.complex_roots() {
        let (k, d) = pool
            .iter()
            .enumerate()
            .map(|(k, &(er, ei))| (k, (re - er).hypot(im - ei)))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("same count");
        worst = worst.max(d);
        pool.remove(k);
    }
    worst
}
