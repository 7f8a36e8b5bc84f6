//! Spectra, exceptional points and metric operators of the two- and
//! three-state PT-symmetric matrix models
//!
//! ```text
//! H2 = [[-1, a], [-a, 1]],    H3 = [[-1, a, 0], [-a, 1, b], [0, -b, 3+c]].
//! ```
//!
//! * [`matmodel`]: Hamiltonians, parities and the pseudo-Hermiticity check.
//! * [`cubic`]: secular polynomial and discriminant-classified root solving.
//! * [`spectrum`]: interior / exceptional / complex classification and
//!   Jordan defects.
//! * [`boundary`]: the reality-domain boundary, doubly exceptional points
//!   and the small-coupling growth of the domain.
//! * [`metric`]: the positive metric family of the two-level model.
//! * [`report`]: tabular CSV / JSON / SVG output and the command runners
//!   behind the `quasiherm` binary.

pub mod boundary;
pub mod cubic;
pub mod error;
pub mod matmodel;
pub mod matrix;
pub mod metric;
pub mod report;
pub mod spectrum;

pub use error::{Error, Result};
pub use matmodel::ModelParams;
pub use matrix::RealSquareMatrix;
