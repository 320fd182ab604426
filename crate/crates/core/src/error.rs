use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("odd length {0}: a Gray image has even length")]
    OddLength(usize),

    #[error("symbol {symbol} at position {position} is out of range")]
    BadSymbol { position: usize, symbol: u8 },

    #[error("unexpected character {found:?} at position {position}")]
    BadChar { position: usize, found: char },

    #[error(
        "enumeration needs a budget of {required} (log2 of codeword count), limit is {budget}"
    )]
    Capacity { required: u32, budget: u32 },

    #[error("minimum distance is undefined for the zero code")]
    UndefinedDistance,

    #[error("invalid order (r={r}, m={m}): need 0 <= r <= m and 1 <= m <= {max_m}", max_m = crate::codes::MAX_M)]
    InvalidOrder { r: i64, m: i64 },

    #[error("override for LRM({r},{m}) has {field} {got}, expected {expected}")]
    OverrideMismatch {
        r: u32,
        m: u32,
        field: &'static str,
        expected: u64,
        got: u64,
    },

    #[error("length {length} exceeds the search limit {limit}")]
    LimitExceeded { length: usize, limit: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
