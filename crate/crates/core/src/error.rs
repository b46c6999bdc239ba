use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("only lambda-free vectors (elements of M(1)) have vertex operators")]
    LambdaDependent,
    #[error("vector is not homogeneous")]
    NotHomogeneous,
    #[error("entry at ({row}, {col}) has no diagonal predecessor")]
    ShiftOutOfRange { row: u32, col: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
