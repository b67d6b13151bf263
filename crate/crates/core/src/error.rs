use thiserror::Error;

/// Errors raised by the algebraic operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a documented precondition (non-unit axis, non-vector argument, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An argument is outside its admissible range (grade, Pauli index, cut, qubit count).
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A matrix is not an element of the required group.
    #[error("not in domain: {0}")]
    Domain(String),
    /// The request would exceed the dense-memory budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
