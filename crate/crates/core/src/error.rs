use thiserror::Error;

/// Errors raised by the constructions and analyses in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is reducible over GF({1})")]
    ReducibleModulus(String, u64),
    #[error("unsupported extension: {0}")]
    UnsupportedExtension(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar {0} does not belong to {1}")]
    FieldMismatch(String, String),
    #[error("cannot enumerate the elements of the infinite field {0}")]
    InfiniteField(String),
    #[error("bad field spec `{0}`: {1}")]
    BadFieldSpec(String, String),
    #[error("cannot parse scalar `{0}`: {1}")]
    BadScalar(String, String),
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element does not belong to this algebra: {0}")]
    AlgebraMismatch(String),
    #[error("algebra has no quadratic form")]
    NoForm,
    #[error("algebra has no grading")]
    NoGrading,
    #[error("invalid quadratic form: {0}")]
    BadForm(String),
    #[error("operation requires {required}, field has characteristic {actual}")]
    BadCharacteristic { required: &'static str, actual: u64 },
    #[error("{0} contains no primitive cube root of unity")]
    NoCubeRoot(String),
    #[error("matrix is singular")]
    Singular,
    #[error("subspace is not closed under the commutator: {0}")]
    NotClosed(String),
    #[error("structure constants do not define a Lie algebra: {0}")]
    NotLie(String),
    #[error("irreducibility test inconclusive after {0} trials")]
    Inconclusive(usize),
    #[error("search space of {candidates} candidates exceeds budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("element is not a nonzero idempotent")]
    NotIdempotent,
    #[error("algebra has no two-sided unit")]
    NotUnital,
    #[error("idempotent does not fit a known class: centralizer dim {dim}, norm rank {rank}")]
    ClassificationAnomaly { dim: usize, rank: usize },
    #[error("malformed structure-constant data: {0}")]
    BadAlgebraData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
