use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("value is not a p-adic integer")]
    NotPAdicInteger,
}

pub type Result<T> = std::result::Result<T, Error>;
