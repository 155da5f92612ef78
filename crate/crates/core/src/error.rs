use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty text")]
    EmptyText,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index {index} out of range [1..{len}]")]
    OutOfRange { index: usize, len: usize },

    #[error("text of length {0} is too long (limit is 2^31 - 1)")]
    TextTooLong(usize),

    #[error("alphabet too large: pattern length {pattern_len} with {sigma} symbols exceeds the exact transform range")]
    AlphabetTooLarge { pattern_len: usize, sigma: u32 },

    #[error("transform length {0} exceeds the supported maximum")]
    TransformTooLong(usize),

    #[error("dimension mismatch: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("malformed matrix file at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported: {0}")]
    Unsupported(&'static str),

    #[error("wildcard characters differ ({0:?} vs {1:?})")]
    WildcardMismatch(u8, u8),
}
