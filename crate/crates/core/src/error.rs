use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order of q^2 must be at least 2, got {0}")]
    InvalidOrder(i64),
    #[error("operands live in different cyclotomic fields (l = {left} vs l = {right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("not Schur-scalar: {0} does not act by a scalar")]
    NotSchurScalar(String),
    #[error("module does not satisfy the defining relations")]
    RelationsViolated,
    #[error("module is not simple")]
    NotSimple,
    #[error("eigenvalue not in ground field; supply hint")]
    EigenvalueNotFound,
    #[error("hint rejected: {0}")]
    HintRejected(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
