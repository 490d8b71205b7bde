use thiserror::Error;

/// Errors raised by group construction and the subgroup algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree {0} is outside the supported range 1..=255")]
    DegreeOutOfRange(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image list is not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("cannot parse permutation {text:?}: {reason}")]
    PermParse { text: String, reason: String },
    #[error("{what} is not contained in the ambient group")]
    NotContained { what: &'static str },
    #[error("subgroup is not normal in the ambient group")]
    NotNormal,
    #[error("group of order {order} exceeds the limit {limit} for {operation}")]
    TooLarge {
        order: u64,
        limit: u64,
        operation: &'static str,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero has no prime factorization")]
    Zero,
    #[error("cannot parse prime set {text:?}: {reason}")]
    PiParse { text: String, reason: String },
    #[error("subgroup is not a Hall subgroup of the ambient group")]
    NotHall,
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("unsupported group specification: {0}")]
    Unsupported(String),
    #[error("no expectations cover {0}")]
    Uncovered(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
