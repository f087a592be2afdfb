use thiserror::Error;

/// Errors raised by group construction, structural computations and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("image array is not a bijection")]
    NotBijection,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: usize },

    #[error("group order does not fit in 64 bits")]
    OrderOverflow,

    #[error("at least one generator is required")]
    NoGenerators,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("not a normal subgroup: {0}")]
    NotNormal(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("the set G \\ N is empty (N = G)")]
    EmptyComplement,

    #[error("EPPO group with no matching fingerprint: {0}")]
    ClassificationGap(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),

    #[error("unknown subgroup label `{0}`")]
    UnknownSubgroup(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
