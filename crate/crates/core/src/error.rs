use thiserror::Error;

/// Every fallible operation in the crate reports through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series inverse needs a unit constant term, got {0}")]
    NonUnitConstant(String),
    #[error("series exp needs a zero constant term, got {0}")]
    NonZeroConstant(String),
    #[error("series log needs constant term 1, got {0}")]
    LogConstant(String),
    #[error("window infeasible: {0}")]
    Window(String),
    #[error("coefficient z^{a} w^{b} lies outside the sound window {window}")]
    OutOfWindow { a: i32, b: i32, window: String },
    #[error("truncation: {0}")]
    Truncation(String),
    #[error("basis elimination left a nonzero remainder: {0}")]
    Remainder(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
