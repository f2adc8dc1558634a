use thiserror::Error;

use crate::graph::{GraphError, ParseError};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("instance too large for {what}: {size} exceeds the cap of {cap}")]
    ExceedsCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("value on edge {edge} is not in {{0, 1/2, 1}}")]
    NotHalfIntegral { edge: usize },
    #[error("vertex {vertex} is not covered")]
    InfeasibleCover { vertex: usize },
    #[error("cover weight {weight} is not optimal (optimum {optimum})")]
    NotOptimal {
        weight: Box<Rational>,
        optimum: Box<Rational>,
    },
    #[error("allocation entry for vertex {vertex} is negative")]
    NegativeAllocation { vertex: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the failure is a size cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::ExceedsCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
