//! Error type shared by all engine modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("monomial length mismatch")]
    LengthMismatch,
    #[error("coefficient domain mismatch")]
    DomainMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("step budget exceeded ({0} steps)")]
    BudgetExceeded(u64),
    #[error("saturation by zero polynomial")]
    ZeroSaturation,
    #[error("generator not homogeneous in projective block ({0})")]
    NonHomogeneous(String),
    #[error("finite-field search space too large: {0} points")]
    SearchSpaceTooLarge(u128),
    #[error("coefficient denominator not invertible mod {0}")]
    DenominatorNotInvertible(u64),
    #[error("specialized fibre ideal is not zero-dimensional (dimension {0})")]
    NotZeroDimensional(i64),
    #[error("fibre counts disagree between sample points ({0} vs {1})")]
    CountDisagreement(usize, usize),
    #[error("invalid stratum data: {0}")]
    InvalidStratum(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("map file error: {0}")]
    MapFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
