use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {what} {input:?} at position {position}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        position: usize,
        reason: String,
    },

    #[error("not a permutation of 1..{len}: {letters:?}")]
    NotAPermutation { letters: Vec<u32>, len: usize },

    #[error("{0} must be nonempty")]
    Empty(&'static str),

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    AboveCap { n: usize, cap: usize },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("incompatible constraint: {0}")]
    Incompatible(String),

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error("no registered formula for {0}")]
    NotRegistered(String),

    #[error("series coefficient {n} is not an integer: {value}")]
    NonInteger { n: usize, value: String },

    #[error("series coefficient {n} fails the rounding tolerance: n!c = {scaled}, residual {residual:e}")]
    Tolerance { n: usize, scaled: f64, residual: f64 },

    #[error("reciprocal of a series with zero constant term")]
    ZeroConstantTerm,

    #[error("coefficient {n} requested from a series known only below order {order}")]
    BeyondOrder { n: usize, order: usize },

    #[error("cache conflict for {key} at n = {n}: {old} vs {new}")]
    CacheConflict {
        key: String,
        n: usize,
        old: String,
        new: String,
    },

    #[error("cache file: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
