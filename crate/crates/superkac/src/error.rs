use thiserror::Error;

/// Errors surfaced by the library.
///
/// The CLI maps these onto its exit-code contract: parse failures exit 1,
/// domain/precondition errors exit 2, size-cap aborts exit 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid structural parameters, e.g. an unsupported (m, n) pair.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition was violated.
    #[error("precondition error: {0}")]
    Precondition(String),

    /// A functional with no well-defined annihilator ideal.
    #[error("degenerate functional: {0}")]
    Degenerate(String),

    /// Instance exceeds the configured size caps.
    #[error("instance too large: {0}")]
    SizeCap(String),

    /// An internal consistency check failed; indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
