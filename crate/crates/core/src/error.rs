use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical kernels and the experiment drivers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument {z} outside the supported range: {reason}")]
    Range { z: Complex64, reason: &'static str },

    #[error("domain error at {z}: {reason}")]
    Domain { z: Complex64, reason: &'static str },

    #[error("overflow while evaluating at {z}")]
    Overflow { z: Complex64 },

    #[error("no convergence after {iterations} iterations ({what})")]
    Convergence { what: &'static str, iterations: usize },

    #[error("Newton iteration diverged from start {start}")]
    Divergence { start: Complex64 },

    #[error("derivative vanishes at {z}")]
    ZeroDerivative { z: Complex64 },

    #[error("function vanishes on the contour (min |f| = {min_abs:e})")]
    BoundaryZero { min_abs: f64 },

    #[error("winding number {raw} is not close to an integer")]
    NonInteger { raw: f64 },

    #[error("subdivision depth limit reached near {center}")]
    DepthLimit { center: Complex64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
