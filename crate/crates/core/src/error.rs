use thiserror::Error;

/// Errors produced by the special functions, the series engines and the catalog.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument sits on (or within the guard radius of) a pole.
    #[error("pole at {0}")]
    Pole(f64),
    /// A precondition on the arguments does not hold.
    #[error("domain error: {0}")]
    Domain(String),
    /// A series hit its term cap before meeting the stopping rule.
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },
    #[error("unknown identity id `{0}`")]
    UnknownId(String),
    /// Malformed parameter point (missing, extra or non-integer symbol).
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
