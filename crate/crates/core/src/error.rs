use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants that describe a failed internal verification (`WitnessVerificationFailed`,
/// `CaseInvariantViolated`, `OverlapInvariantViolated`) indicate a bug and are always
/// surfaced to the caller.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid factor group `{group}`: {reason}")]
    InvalidFactor { group: String, reason: String },

    #[error("a free product needs at least one factor")]
    NoFactors,

    #[error("letters from different factors ({0} and {1}) cannot be multiplied in a factor")]
    MixedFactors(usize, usize),

    #[error("bad letter: {0}")]
    BadLetter(String),

    #[error("the identity has no primitive root")]
    IdentityHasNoPrimitiveRoot,

    #[error("element is not conjugate to its inverse")]
    NotInverseConjugate,

    #[error("commutator witness does not reproduce the target: {0}")]
    WitnessVerificationFailed(String),

    #[error("word of length {len} exceeds the search cap {cap}")]
    TooLong { len: usize, cap: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("impossible overlap configuration: {0}")]
    ImpossibleConfiguration(String),

    #[error("overlap invariant violated: {0}")]
    OverlapInvariantViolated(String),

    #[error("power is not a commutator")]
    NotACommutatorPower,

    #[error("search bounds exhausted without a match: {0}")]
    SearchBoundExceeded(String),

    #[error("case invariant violated ({invariant}): {lhs} != {rhs}")]
    CaseInvariantViolated {
        invariant: String,
        lhs: String,
        rhs: String,
    },

    #[error("clause {clause} failed: {detail}")]
    AssertionFailed { clause: String, detail: String },

    #[error("group file: {0}")]
    GroupFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
