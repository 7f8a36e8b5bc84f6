//! Dense real square matrices of small order.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Row-major dense real matrix. Orders used here are 2 and 3.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSquareMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl RealSquareMatrix {
    pub fn new(order: usize, entries: Vec<f64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Contract("matrix order must be positive".into()));
        }
        if entries.len() != order * order {
            return Err(Error::Contract(format!(
                "{} entries supplied for an order-{order} matrix",
                entries.len()
            )));
        }
        Ok(Self { order, entries })
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        Self {
            order: N,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::diagonal(&vec![1.0; order])
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.order)
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::Dimension {
                expected: self.order,
                found: other.order,
            });
        }
        Ok(())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let n = self.order;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = (0..n).map(|k| self[(i, k)] * rhs[(k, j)]).sum();
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(x, y)| x - y).collect();
        Ok(Self {
            order: self.order,
            entries,
        })
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|x| k * x).collect(),
        }
    }

    /// `self - shift * I`
    pub fn shifted(&self, shift: f64) -> Self {
        let mut m = self.clone();
        for i in 0..self.order {
            m[(i, i)] -= shift;
        }
        m
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self[(i, i)]).sum()
    }

    /// Monic characteristic polynomial `det(λI - M)` as coefficients of
    /// `λ^n, λ^(n-1), ..., λ^0`. Orders 1 to 3 only.
    pub fn characteristic_polynomial(&self) -> Result<Vec<f64>> {
        let m = self;
        match self.order {
            1 => Ok(vec![1.0, -m[(0, 0)]]),
            2 => {
                let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
                Ok(vec![1.0, -m.trace(), det])
            }
            3 => {
                let minor = |i: usize, j: usize| m[(i, i)] * m[(j, j)] - m[(i, j)] * m[(j, i)];
                let minors = minor(0, 1) + minor(0, 2) + minor(1, 2);
                let det = m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
                    - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
                    + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)]);
                Ok(vec![1.0, -m.trace(), minors, -det])
            }
            n => Err(Error::UnsupportedDimension(n)),
        }
    }

    /// Rank by Gaussian elimination with partial pivoting. A pivot counts
    /// only if it exceeds `rel_threshold * max_abs()`.
    pub fn rank(&self, rel_threshold: f64) -> usize {
        let n = self.order;
        let cutoff = rel_threshold * self.max_abs();
        if self.max_abs() == 0.0 {
            return 0;
        }
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..n {
            if rank == n {
                break;
            }
            let (pivot_row, pivot) = (rank..n)
                .map(|r| (r, a[(r, col)].abs()))
                .fold((rank, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot <= cutoff {
                continue;
            }
            for j in 0..n {
                a.entries.swap(rank * n + j, pivot_row * n + j);
            }
            for r in rank + 1..n {
                let factor = a[(r, col)] / a[(rank, col)];
                for j in col..n {
                    let v = a[(rank, j)];
                    a[(r, j)] -= factor * v;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl Index<(usize, usize)> for RealSquareMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.order + j]
    }
}

impl IndexMut<(usize, usize)> for RealSquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.entries[i * self.order + j]
    }
}

impl Serialize for RealSquareMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[f64]> = self.rows().collect();
        rows.serialize(s)
    }
}

impl fmt::Display for RealSquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>12.6}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
