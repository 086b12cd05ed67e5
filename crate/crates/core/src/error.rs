use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot compose: codomain size {left} does not match domain size {right}")]
    Composition { left: usize, right: usize },

    #[error("index {index} out of range (bound {bound})")]
    Index { index: usize, bound: usize },

    #[error("invalid ordinal map: {0}")]
    InvalidMap(String),

    #[error("degree {requested} is beyond the truncation dimension {available}")]
    InsufficientTruncation { requested: usize, available: usize },

    #[error("enumeration of {requested} candidates exceeds the budget of {budget}")]
    BudgetExceeded { requested: u128, budget: u128 },

    #[error("ordinal {requested} exceeds the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("map is not simplicial: {0}")]
    NotSimplicial(String),

    #[error("simplex does not factor through the subcomplex: {0}")]
    FactorizationFailure(String),

    #[error("verification failed: {0}")]
    VerificationFailure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
