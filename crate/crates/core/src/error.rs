use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("unsupported size: n = {n} (maximum {max})")]
    UnsupportedSize { n: usize, max: usize },

    /// The (n-2,2) component does not exist for n <= 3.
    #[error("representation absent: (n-2,2) needs n >= 4, got n = {n}")]
    RepresentationAbsent { n: usize },

    #[error("vertex index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("input is not a tree")]
    NotATree,

    #[error("word budget exceeded: {words} words requested, budget {budget}")]
    BudgetExceeded { words: u128, budget: u128 },

    #[error("ambient size {n} too small for a forest on {needed} vertices")]
    AmbientTooSmall { needed: usize, n: usize },

    #[error("invalid switching set: {0}")]
    InvalidSwitchingSet(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },

    /// A hard invariant failed; indicates a bug rather than bad input.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("regression failure: {0}")]
    Regression(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
