use thiserror::Error;

#[derive(Debug, Error)]
pub enum LanguageError {
    #[error("explicit sequence declares a valid prefix of {have} symbols, need {need}")]
    PrefixTooShort { need: usize, have: usize },

    #[error("{0}")]
    Core(#[from] subshift_core::CoreError),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("operation only supports binary alphabets")]
    NotBinary,

    #[error("state space exceeds cap: {0}")]
    CapExceeded(String),

    #[error("explicit sequence file is malformed: {0}")]
    BadExplicitFile(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
