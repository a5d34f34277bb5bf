use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("family members do not share one descriptor")]
    MixedDescriptors,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("initial datum rejected: {0}")]
    InvalidDatum(String),

    #[error("size guard: {needed} monomials exceeds budget {budget}")]
    BudgetExceeded { needed: usize, budget: usize },

    #[error("descriptor mismatch: {0}")]
    DescriptorMismatch(String),

    #[error("value out of range: {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
