use std::time::Duration;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different rings: {0}")]
    RingMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a prime below 2^31")]
    BadModulus(u64),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("{0}")]
    Usage(String),
}

/// Why a Gröbner computation stopped without an answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbError {
    #[error("budget exhausted after {pairs} pairs in {elapsed:?}")]
    BudgetExhausted { pairs: u64, elapsed: Duration },
    #[error("cancelled")]
    Cancelled,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("not a matroid: {0}")]
    NotMatroid(String),
    #[error("not simple: {0}")]
    NotSimple(String),
    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("invalid matroid input: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("{0}")]
    Slack(String),
    #[error("too many cycles (more than {cap}); use the fundamental-cycle generating set instead")]
    CycleCap { cap: usize },
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
