use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operator label {label} outside 1..={d}")]
    LabelOutOfRange { label: u32, d: usize },

    #[error("unbalanced delimiters at token {0}")]
    Unbalanced(usize),

    #[error("delimiter pair opened at token {0} encloses nothing")]
    EmptyInterior(usize),

    #[error("empty word")]
    EmptyWord,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("N({n},{k}) is undefined; need 0 <= k <= n-1")]
    NarayanaRange { n: u64, k: u64 },

    #[error("predicted output of {predicted} monomials exceeds the cap of {cap}")]
    CapExceeded { predicted: String, cap: u64 },

    #[error("invalid ordered tree: {0}")]
    InvalidTree(String),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("invalid Dyck path: {0}")]
    InvalidDyck(String),

    #[error("series domain error: {0}")]
    SeriesDomain(String),

    #[error("coefficient {index} is not an integer: {value}")]
    NonIntegral { index: usize, value: String },

    #[error("sequence term at index {0} is zero")]
    ZeroTerm(usize),

    #[error("regime {0} is not supported by this operation")]
    UnsupportedRegime(crate::Regime),

    #[error("fixture line {line}: {msg}")]
    Fixture { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
