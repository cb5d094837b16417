use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {index} is out of range for a chain with {size} elements")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("unsupported chain size {0}")]
    InvalidSize(usize),
    #[error("filter threshold {threshold} is invalid for a chain with {size} elements")]
    InvalidThreshold { threshold: usize, size: usize },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("connective `{connective}` is not available on {algebra}")]
    Unsupported { connective: String, algebra: String },
    #[error("enumeration needs {required} evaluation steps but the budget is {budget}")]
    Budget { required: u128, budget: u64 },
    #[error("unknown logic `{0}`")]
    UnknownLogic(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
