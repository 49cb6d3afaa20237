use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and numeric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not unimodular (determinant {0}, expected +1 or -1)")]
    NonUnimodular(i64),
    #[error("matrix determinant must be positive (got {0})")]
    NonpositiveDet(i64),
    #[error("-inf has no left neighbor")]
    NoNeighbor,
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("farey level {n} exceeds the configured limit {max}")]
    FareyTooLarge { n: i64, max: i64 },
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("group level must be >= 1 (got {0})")]
    InvalidLevel(i64),
    #[error("invalid coset representatives: {0}")]
    InvalidReps(String),
    #[error("slash action domain violation: {0}")]
    SlashDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
