use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("operation expects a {expected} ring")]
    KindMismatch { expected: &'static str },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("ring has no homogenizing variable")]
    NoHomogVar,
    #[error("input is not a Groebner basis: {0}")]
    NotGroebner(String),
    #[error("commutator {0} is not in the ideal")]
    MissingCommutator(String),
    #[error("degree bound {bound} is below input degree {needed}")]
    DegreeBoundTooSmall { bound: u32, needed: u32 },
    #[error("degree {requested} exceeds the trusted truncation degree {truncation}")]
    TruncationExceeded { requested: u32, truncation: u32 },
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown variable {name} at {line}:{col}")]
    UnknownVariable { name: String, line: usize, col: usize },
    #[error("mismatched normal sets: {0}")]
    MismatchedNormalSets(String),
}

pub type Result<T> = std::result::Result<T, Error>;
