use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("series not converged after {terms} terms (tail estimate {tail_estimate:e})")]
    NotConverged { terms: usize, tail_estimate: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("spectral certificate refused: {reason}")]
    CertificateRefused {
        reason: String,
        eigenvalue: Option<Complex64>,
    },

    #[error("eigenvector matrix is ill-conditioned (condition number {condition:e})")]
    IllConditioned { condition: f64 },

    #[error("principal branch is ambiguous at eigenvalue {eigenvalue}")]
    BranchAmbiguous { eigenvalue: Complex64 },

    #[error("pole at s = 1")]
    Pole,

    #[error("factor 1 - 2^(1-s) vanishes at s = {s}")]
    FactorZero { s: Complex64 },

    #[error("gamma pole at s = {s}")]
    GammaPole { s: Complex64 },

    #[error("rotation angle {phi} is degenerate (|sin φ| < 1e-6); use the identity or parity map")]
    DegenerateAngle { phi: f64 },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Io(_) => 2,
            Error::CertificateRefused { .. } => 3,
            Error::NotConverged { .. } => 4,
            _ => 5,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
