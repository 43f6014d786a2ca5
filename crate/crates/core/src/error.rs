use thiserror::Error;

/// Errors raised by field construction, geometry, and code analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {order} exceeds the table cap {cap}")]
    CapExceeded { order: u128, cap: u64 },
    #[error("no subfield of order {0} in this field")]
    NotInTower(u64),
    #[error("element is not in the subfield of order {0}")]
    NotInSubfield(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero vector has no projective point")]
    ZeroVector,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("point lies in the listed subspace {0}")]
    PointInSubspace(usize),
    #[error("vector is not fixed by the twisted Frobenius map")]
    NotFixed,
    #[error("invalid element code {code} for field of order {order}")]
    BadElementCode { code: u64, order: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    /// A structural claim about the code did not hold; the message carries the evidence.
    #[error("certificate failure: {0}")]
    Certificate(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
