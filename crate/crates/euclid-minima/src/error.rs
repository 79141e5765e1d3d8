use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmError {
    #[error("reducible polynomial: {0}")]
    ReduciblePolynomial(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("field mismatch: elements belong to different number fields")]
    FieldMismatch,
    #[error("not a unit: |N(u)| = {0}")]
    NotAUnit(String),
    #[error("{0} fundamental units required but {1} supplied")]
    MissingUnits(usize, usize),
    #[error("precision budget exhausted at {0} bits")]
    PrecisionExhausted(u32),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("field file: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, EmError>;
