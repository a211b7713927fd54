use thiserror::Error;

/// Everything that can go wrong while building or querying the workbench objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid simple type {family}{rank}: {reason}")]
    InvalidType {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot parse simple type from {0:?}")]
    TypeParse(String),

    #[error("root system {0} is reducible")]
    Reducible(String),

    #[error("rank mismatch: expected {expected}, got {actual}")]
    RankMismatch { expected: usize, actual: usize },

    #[error("{0:?} is not a root of the ambient system")]
    NotARoot(Vec<i64>),

    #[error("{0:?} is not a member of the subsystem")]
    NotInSubsystem(Vec<i64>),

    #[error("subsystem is not closed: {0}")]
    NotClosed(String),

    #[error("weights must lie in {{0,1,2}}, found {0}")]
    InvalidWeight(i64),

    #[error("basis of a subsystem grading is not a simple system: {0}")]
    InvalidBasis(String),

    #[error("#{{alpha > 0 : d(alpha) = 1}} = {0} is odd")]
    OddIndexExponent(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("q = {p}^{e} overflows 64-bit arithmetic")]
    FieldTooLarge { p: u64, e: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no catalogue type matches a component with Cartan matrix {0:?}")]
    Unclassified(Vec<Vec<i64>>),

    #[error("n = {0} is outside the supported range")]
    OutOfRange(usize),

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
