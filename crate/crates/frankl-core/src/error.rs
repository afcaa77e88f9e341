use thiserror::Error;

use crate::setcode::MAX_DOMAIN;

/// Errors shared by all engine modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain size {0} exceeds the supported maximum of {MAX_DOMAIN}")]
    DomainTooLarge(u32),

    #[error("set is not contained in the ambient domain")]
    OutOfDomain,

    #[error("invalid weight function: {0}")]
    InvalidWeight(String),

    #[error("the candidate family is empty")]
    EmptyFamily,

    #[error("malformed family: {0}")]
    InvalidFamily(String),

    #[error("hypercube base and spread must be disjoint")]
    OverlappingBase,

    #[error("instance too large for exhaustive enumeration: {0}")]
    TooLarge(String),

    #[error("expected a family of exactly {want_sets} sets of {want_size} elements")]
    ArityMismatch { want_sets: usize, want_size: usize },

    #[error("mapping is not a permutation of 0..{0}")]
    InvalidPermutation(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
