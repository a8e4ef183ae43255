use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot embed order {from} into order {to}")]
    IncompatibleOrder { from: u32, to: u32 },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("rule {lhs} is not orientable: {msg}")]
    NonOrientable { lhs: String, msg: String },
    #[error("duplicate rule for {0}")]
    DuplicateRule(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not an automorphism of the algebra")]
    NotAutomorphism(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("representation fails relation: {0}")]
    InvalidRepresentation(String),
    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
