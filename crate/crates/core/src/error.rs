use thiserror::Error;

/// Errors raised by parsing, construction and analysis of Boolean functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("decoded {found} bits, expected 2^{n} = {expected}")]
    LengthMismatch { n: u32, expected: usize, found: usize },

    #[error("invalid character {byte:#04x} at byte offset {offset}")]
    InvalidCharacter { offset: usize, byte: u8 },

    #[error("point index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: u32 },

    #[error("dimension {n} exceeds the limit {max} for this operation")]
    DimensionTooLarge { n: u32, max: u32 },

    #[error("invalid number of variables {n}, expected {min}..={max}")]
    InvalidDimension { n: u32, min: u32, max: u32 },

    #[error("cannot flip {r} distinct points of a table with {len} entries")]
    TooManyFlips { r: usize, len: usize },

    #[error("significance level {0} is not in (0, 1)")]
    InvalidAlpha(f64),

    #[error("invalid experiment parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
