use thiserror::Error;

/// Failures reported by the model, solver and boundary routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("unsupported dimension {0}: only 2 and 3 are modelled")]
    UnsupportedDimension(usize),

    #[error("dimension mismatch: expected order {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("no sign change of the discriminant along the ray theta = {theta} (c = {c}) up to r = {r_max}")]
    NoBoundaryOnRay { theta: f64, c: f64, r_max: f64 },

    #[error("no real doubly exceptional point at c = {c}: {detail}")]
    NoRealDep { c: f64, detail: String },

    #[error("b = {b} is outside the small-coupling regime 0 < |b| < sqrt(2)")]
    OutsideLemmaRegime { b: f64 },

    #[error("metric degenerates at the exceptional point: |a| = {a} >= 1 leaves no invertible metric")]
    EpDegenerate { a: f64 },

    #[error("{eigenvalue} is not a repeated eigenvalue of multiplicity {multiplicity}")]
    NotRepeated { eigenvalue: f64, multiplicity: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Process exit status: 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
