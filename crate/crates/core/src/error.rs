use thiserror::Error;

/// Errors shared across the workbench.
///
/// Mathematical check *failures* are not errors: verifiers return reports
/// with per-condition verdicts. Errors are reserved for ill-formed input,
/// violated preconditions and resource ceilings.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field spec mismatch: {0}")]
    SpecMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("resource ceiling exceeded: {0}")]
    Ceiling(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
