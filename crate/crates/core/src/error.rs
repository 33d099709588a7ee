use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("invalid literal: {0}")]
    InvalidLiteral(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("ring mismatch: operands live in different rings")]
    RingMismatch,
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceCap(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
