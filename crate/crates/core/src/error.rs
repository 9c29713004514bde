use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NonHermitianInput { deviation: f64 },

    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    #[error("argument out of domain: {0}")]
    DomainError(String),

    #[error("adaptive quadrature exceeded its panel budget of {budget} (remaining error {error:.3e})")]
    QuadratureNoConvergence { budget: usize, error: f64 },

    #[error("infinite-separation limit did not converge by R = {cap} (last change {last_change:.3e})")]
    RLimitNotConverged { cap: u32, last_change: f64 },

    #[error("state is not a real X-state: {0}")]
    NotXState(String),

    #[error("chain of {sites} sites exceeds the dense diagonalization limit of {max}")]
    SizeLimit { sites: usize, max: usize },

    #[error("no zero-entanglement region found in h \u{2208} [{lo}, {hi}]")]
    NotFound { lo: f64, hi: f64 },

    #[error("table has no rows")]
    EmptyTable,

    #[error("unknown column `{0}`")]
    UnknownColumn(String),

    #[error("malformed table: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Errors that stem from a numerical procedure failing to converge, as
    /// opposed to bad input.
    pub fn is_convergence_failure(&self) -> bool {
        matches!(
            self,
            Error::QuadratureNoConvergence { .. } | Error::RLimitNotConverged { .. }
        )
    }
}
