use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("a matrix chain needs at least one factor")]
    EmptyChain,

    #[error("tuples live over different rings (Z/{left}Z vs Z/{right}Z)")]
    RingMismatch { left: u64, right: u64 },

    #[error("tuple of length {0} is too short for this operation (need at least 2)")]
    TupleTooShort(usize),

    #[error("k must be nonzero modulo N")]
    ZeroMonomial,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("constructed witness failed verification: {0}")]
    WitnessRejected(String),

    #[error("corrupt checkpoint {path}: line {line}: {reason}")]
    CorruptCheckpoint {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("checkpoint {path} belongs to a different job: {reason}")]
    CheckpointMismatch { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
