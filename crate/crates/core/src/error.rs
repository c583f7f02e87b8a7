use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partition weight {weight} exceeds the oracle cap {cap}")]
    OracleCapExceeded { weight: usize, cap: usize },

    #[error("series exponential requires a zero constant term")]
    NonzeroConstantTerm,

    #[error("series exponential needs every monomial to involve a capped variable; `{0}` does not")]
    UncappedMonomial(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
