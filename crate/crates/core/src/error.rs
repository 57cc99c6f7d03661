use thiserror::Error;

/// Errors produced by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rank parameter that must be positive was zero or negative.
    #[error("generalized rank must be positive")]
    ZeroRank,
    /// The genus of the reduced curve must be non-negative.
    #[error("genus of the reduced curve must be non-negative")]
    NegativeGenus,
    /// Complete ranks must be non-negative and not both zero.
    #[error("invalid complete rank ({r0},{r1})")]
    InvalidRank { r0: i64, r1: i64 },
    /// No generalized vector bundle has the requested rank, degree and index.
    #[error("no generalized vector bundle with these invariants")]
    NoSuchGvb,
    /// The complete type does not have r0 = r1.
    #[error("not a generalized vector bundle")]
    NotGvb,
    /// The complete type violates the non-emptiness conditions.
    #[error("inadmissible type")]
    InadmissibleType,
    /// Two types were compared that do not share (R, D).
    #[error("types do not share the same generalized rank and degree")]
    MismatchedClass,
    /// An enumeration window with min > max.
    #[error("empty enumeration window (d1 min > d1 max)")]
    EmptyWindow,
    /// Rank/degree sum constraints of a lemma input were violated.
    #[error("rank/degree sum constraints violated")]
    SumConstraint,
    /// Strict ordering constraints of a lemma input were violated.
    #[error("ordering constraints violated: {0}")]
    OrderingViolated(&'static str),
    /// The coefficient characteristic is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The truncation order is too small for the requested computation.
    #[error("truncation too small: {0}")]
    Truncation(String),
    /// Two graded modules built over different ring parameters were mixed.
    #[error("graded modules built over different ring parameters")]
    ParamsMismatch,
    /// A local type profile violated one of its invariants.
    #[error("invalid profile: {0}")]
    Profile(String),
    /// Any other invalid input.
    #[error("invalid input: {0}")]
    Invalid(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
