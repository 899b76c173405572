use thiserror::Error;

/// Errors raised by the permutation algebra, the code constructions and the
/// verification oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A received word could not be decoded within the code's guaranteed radius.
    #[error("uncorrectable error: {0}")]
    Uncorrectable(String),
    /// No code parameters satisfy the construction's length equations.
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    /// A search-based construction ran out of candidates.
    #[error("construction failure: {0}")]
    ConstructionFailure(String),
    /// Internal invariant broken; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

pub(crate) fn uncorrectable<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Uncorrectable(msg.into()))
}
