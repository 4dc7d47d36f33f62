use thiserror::Error;

use crate::quantum::Basis;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument fell outside the set the operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Two states cannot be combined or compared (different grids or bases).
    #[error("incompatible states: {0}")]
    Incompatible(String),

    #[error("cell ({i}, {j}) is out of bounds for a {nx}x{np} grid")]
    OutOfBounds {
        i: usize,
        j: usize,
        nx: usize,
        np: usize,
    },

    #[error("state is parametrized by {actual}, expected {expected}")]
    WrongBasis { expected: Basis, actual: Basis },

    #[error("invalid scenario configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
