use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 1,
            _ => 2,
        }
    }

    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::SizeCap(_) => "size_cap",
            Error::NotPrime(_) => "not_prime",
            Error::ZeroInverse => "zero_inverse",
            Error::FieldMismatch => "field_mismatch",
            Error::Invalid(_) => "invalid_input",
            Error::Constraint(_) => "constraint",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
