//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by parsing, group operations, and resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input contained no values.
    #[error("empty input")]
    EmptyInput,

    /// The word is not a bijection on {{1, ..., n}}.
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    /// Two permutations of different sizes were combined.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// An operation was asked to run above its configured cap.
    #[error("size {size} exceeds the cap of {cap}")]
    SizeTooLarge { size: usize, cap: usize },

    /// An even size was required.
    #[error("size must be even, got {0}")]
    OddSize(usize),

    /// An odd size was required.
    #[error("size must be odd, got {0}")]
    EvenSize(usize),

    /// Unrecognized counting backend name.
    #[error("unknown backend `{0}` (expected `dp` or `bt`)")]
    UnknownBackend(String),

    /// Invalid block parameter for a parity context.
    #[error("invalid m = {m} for the {parity} case")]
    InvalidM { m: usize, parity: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
