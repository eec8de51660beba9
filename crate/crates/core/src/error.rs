use thiserror::Error;

/// Errors reported for inputs that violate an operation's preconditions.
///
/// Internal invariant violations (a formula division that is not exact, an
/// image of the injection that is not a Lyndon word) are bugs and panic
/// instead of surfacing here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(usize),
    #[error("alphabet sizes differ: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("symbol {symbol} is out of range for alphabet size {k}")]
    SymbolOutOfRange { symbol: u32, k: usize },
    #[error("the empty word is not accepted here")]
    EmptyWord,
    #[error("word of length {len} is too short: at least {min} symbols required")]
    WordTooShort { len: usize, min: usize },
    #[error("rotation offset {offset} out of range for word of length {len}")]
    RotationOutOfRange { offset: usize, len: usize },
    #[error("content must have positive total length")]
    EmptyContent,
    #[error("every symbol count must be at least 1, but symbol {symbol} has count 0")]
    ZeroCount { symbol: usize },
    #[error("argument must be positive")]
    NonPositive,
    #[error("at least one value must be non-zero")]
    AllZero,
    #[error("density {d} out of range for length {n}: need 0 < d < n")]
    DensityOutOfRange { n: usize, d: usize },
    #[error("{0} is not a necklace")]
    NotNecklace(String),
    #[error("{0} is a stable necklace")]
    StableNecklace(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("oracle refuses total length {total}: cap is {cap}")]
    OracleCap { total: usize, cap: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
