use thiserror::Error;

/// Errors raised by the recognizers, constructors and parsers of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid member: {0}")]
    InvalidMember(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("certificate error: {0}")]
    Certificate(String),

    #[error("unknown catalog name: {0}")]
    InvalidName(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
