use thiserror::Error;

/// Failures surfaced by the library. The CLI maps each variant onto an exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unit ideal: {0}")]
    UnitIdeal(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("genericity failure: {0}")]
    Genericity(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn assertion(msg: impl Into<String>) -> Self {
        Error::Assertion(msg.into())
    }

    /// Process exit code used by the `conecalc` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UnknownVariable(_)
            | Error::RingMismatch(_)
            | Error::Invalid(_)
            | Error::UnitIdeal(_) => 2,
            Error::ResourceLimit(_) | Error::NotApplicable(_) | Error::Assertion(_) => 3,
            Error::Genericity(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable(_) => "unknown-variable",
            Error::RingMismatch(_) => "ring-mismatch",
            Error::Invalid(_) => "invalid",
            Error::UnitIdeal(_) => "unit-ideal",
            Error::ResourceLimit(_) => "resource-limit",
            Error::NotApplicable(_) => "not-applicable",
            Error::Assertion(_) => "assertion",
            Error::Genericity(_) => "genericity",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
