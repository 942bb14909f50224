use thiserror::Error;

/// Errors raised by the matroid, partition and verification routines.
///
/// Element indices carried by the variants are 0-based; messages print them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("column {} of the matrix is zero", .column + 1)]
    ZeroColumn { column: usize },
    #[error("element {} is a loop (rank of the singleton is 0)", .element + 1)]
    Loop { element: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("cannot truncate a matroid of rank 0")]
    RankZero,
    #[error("ground set of size {size} exceeds the limit of {limit}")]
    GroundTooLarge { size: usize, limit: usize },
    #[error("subset {bits:#x} is not contained in the ground set of size {ground}")]
    NotInGround { bits: u64, ground: usize },
    #[error("multiset contains the empty set")]
    EmptyMember,
    #[error("partitions have different supports")]
    SupportMismatch,
    #[error("set is not a subset of the base set B")]
    NotSubsetOfB,
    #[error("base set of size {size} is too large for exhaustive minimisation (limit {limit})")]
    BTooLarge { size: usize, limit: usize },
    #[error("minimiser certification failed: {0}")]
    CertificationFailed(String),
    #[error("rows of the matrix are linearly dependent")]
    RankDeficientInput,
    #[error("lattice of optimal partitions violated: {0}")]
    LatticeViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
