use thiserror::Error;

/// Errors reported by plan construction, solvers and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iteration failed to converge; never silently ignored.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Array lengths or grid dimensions do not match.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A computation produced NaN or infinity where a finite value is required.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("malformed field file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
