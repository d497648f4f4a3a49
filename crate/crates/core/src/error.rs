use crate::arrangement::NondegeneracyReport;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The arrangement is not a non-degenerate deformation of the required
    /// Coxeter type.
    #[error("{0}")]
    Degenerate(NondegeneracyReport),

    #[error("hyperplane index {index} out of range ({len} hyperplanes)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("flat is not an element of the intersection poset")]
    UnknownFlat,

    #[error("{q}^{dim} points exceeds the point-count limit of {limit}; use the characteristic polynomial instead")]
    FieldTooLarge { q: u64, dim: usize, limit: u64 },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
