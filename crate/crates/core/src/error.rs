use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("alphabet must have at least one symbol")]
    EmptyAlphabet,

    #[error("alphabet labels must be distinct single characters: {0:?}")]
    BadLabel(String),

    #[error("alphabet too large: {0} symbols (max 255)")]
    AlphabetTooLarge(usize),

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error("letter index {index} out of range for alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },

    #[error("substitution must define a nonempty rule for every letter")]
    MissingOrEmptyRule,

    #[error("substitution is degenerate: letter {0:?} never expands ({1})")]
    NoGrowth(String, String),

    #[error("operation requires a bijective constant-length substitution")]
    NotBijective,

    #[error("invalid Cayley table: {0}")]
    BadGroup(String),

    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
