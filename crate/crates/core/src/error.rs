use thiserror::Error;

/// Errors produced by constructions and classifiers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be at least {min}, got {got}")]
    TooSmall { min: u64, got: u64 },

    #[error("argument {got} outside the supported range {min}..={max}")]
    OutOfRange { got: u64, min: u64, max: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("primes must be pairwise distinct: {0:?}")]
    RepeatedPrime(Vec<u64>),

    #[error("{what} has size {size}, exceeding the cap of {cap}")]
    CapExceeded { what: &'static str, size: u64, cap: u64 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("element index {index} out of range for a group of order {order}")]
    BadElement { index: usize, order: usize },

    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },

    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    BadVertex { vertex: usize, count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("annotation count {got} does not match vertex count {expected}")]
    AnnotationMismatch { expected: usize, got: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("no isomorphism strategy applies: {0}")]
    NoIsoStrategy(String),

    #[error("cannot parse group spec {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("malformed graph document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
