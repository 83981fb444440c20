use thiserror::Error;

/// Errors surfaced by the engine. Validation failures are reported verbatim
/// by the command-line front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("unsupported type/twist pair {0}")]
    UnsupportedTwist(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("all labels are zero")]
    AllZero,
    #[error("labels are not coprime (gcd {0}); divide out the gcd explicitly")]
    NonCoprime(i64),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("negative label at node {0}")]
    NegativeLabel(usize),
    #[error("permutation is not a diagram symmetry")]
    NotASymmetry,
    #[error("automorphism check failed: {0}")]
    Automorphism(String),
    #[error("alcove normalization exceeded the iteration cap")]
    NonTermination,
    #[error("type mismatch: {0}")]
    Mismatch(String),
    #[error("degenerate Killing form")]
    DegenerateKilling,
    #[error("basis mismatch between tables")]
    BasisMismatch,
    #[error("inconsistent arithmetic: {0}")]
    Arithmetic(String),
    #[error("inconclusive after {0} trials")]
    Inconclusive(usize),
    #[error("trials must be positive")]
    ZeroTrials,
    #[error("not a classical type: {0}")]
    NotClassical(String),
    #[error("wrong realization type: {0}")]
    WrongType(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
