use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system: {0}")]
    InvalidSystem(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("enumeration cap exceeded: more than {cap} elements (raise max_weyl to continue)")]
    CapExceeded { cap: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
