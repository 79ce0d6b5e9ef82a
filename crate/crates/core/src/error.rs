use thiserror::Error;

/// Errors raised by the library.
///
/// The variants split into two families: malformed input (shapes, tableaux,
/// weight windows) and domain errors (a coefficient map asked to evaluate a
/// label it is not defined on, or a non-invertible series).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no weight given for diagonal offset {0}")]
    MissingWeight(i64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series with zero constant term is not invertible")]
    NotInvertible,
}

impl Error {
    /// True for errors caused by evaluating outside a map's domain, as
    /// opposed to structurally malformed input.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::NotInvertible)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
