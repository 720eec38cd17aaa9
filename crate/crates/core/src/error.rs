use thiserror::Error;

use crate::system::Violation;

/// Errors raised by the library. Axiom violations found by
/// [`crate::system::SphericalSystem::validate`] are plain data; they only
/// become an error when an operation needs a valid system.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("illegal rank {rank} for type {family}")]
    IllegalRank { family: char, rank: usize },

    #[error("root system spec is empty")]
    EmptySpec,

    #[error("cannot parse root system spec {0:?}")]
    BadSpec(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("root system is reducible")]
    Reducible,

    #[error("weight is not dominant")]
    NotDominant,

    #[error("{0} is not a spherical root of this root system")]
    NotSphericalRoot(String),

    #[error("{0} is not a subset of the given set")]
    NotSubset(String),

    #[error("system violates {} axiom(s): {}", .0.len(), join(.0))]
    Invalid(Vec<Violation>),

    #[error("color subset {0:?} is not distinguished")]
    NotDistinguished(Vec<usize>),

    #[error("kernel semigroup is not free within coordinate bound {bound}")]
    NotFree { bound: i64 },

    #[error("quotient generator {0} is not a spherical root of the ambient root system")]
    ForeignQuotientRoot(String),

    #[error("quotient violates the axioms: {}", join(.0))]
    QuotientInvalid(Vec<Violation>),

    #[error("edge is not minimal")]
    NotMinimal,

    #[error("system is not spherically closed")]
    NotSphericallyClosed,

    #[error("malformed document: {0}")]
    Document(String),
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
