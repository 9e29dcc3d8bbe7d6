use crate::multiindex::MultiIndex;

/// Errors produced by presentation loading and element arithmetic.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("c[{i},{j}] is not invertible: entry at point {point} is zero")]
    NonInvertibleConstant { i: usize, j: usize, point: usize },

    #[error("generator index {0} out of range (n = {1})")]
    GeneratorIndex(usize, usize),

    #[error("operation undefined for the zero element")]
    ZeroElement,

    #[error("method requires a quasi-commutative presentation")]
    NotQuasiCommutative,

    #[error("coefficient is not supported on Per^{alpha}(Omega): nonzero at moved point {point}")]
    SupportViolation { alpha: MultiIndex, point: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("associativity check failed: {0}")]
    NotAssociative(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
