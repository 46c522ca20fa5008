use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("rank {rank} is out of range for family {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight is not integral: {0}")]
    NotIntegral(String),
    #[error("simple root index {0} out of range")]
    NotSimple(usize),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("representation is not faithful: {0}")]
    Unfaithful(String),
    #[error("{what} budget of {limit} exceeded after {scanned} steps")]
    Budget { what: &'static str, limit: u64, scanned: u64 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unstable representation: {0}")]
    Unstable(String),
}

impl Error {
    /// True for errors caused by exhausting a configured budget.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
