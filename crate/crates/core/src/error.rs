use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input data.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Input is well formed but the operation is not defined for it.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The enumeration would visit more tuples than the configured budget allows.
    #[error("enumeration budget exceeded: {required} tuples required, budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },

    #[error("truncation: {0}")]
    Truncation(String),

    #[error("the curve vanishes identically on the branch (same branch)")]
    SameBranch,

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An arithmetic invariant failed. Never expected; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
