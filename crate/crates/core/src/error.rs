use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Coxeter matrix is not square (row {row} has {len} entries, expected {rank})")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("Coxeter matrix is asymmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("diagonal entry ({0}, {0}) must be 1")]
    BadDiagonal(usize),
    #[error("off-diagonal entry ({0}, {1}) must be at least 2")]
    EntryTooSmall(usize, usize),
    #[error("rank {0} is out of range (1..=64)")]
    BadRank(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate or malformed generator label {0:?}")]
    BadLabel(String),
    #[error("unknown Coxeter type {0:?}")]
    UnknownType(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("malformed token {0:?}")]
    BadToken(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("element {0} is not a reflection")]
    NotAReflection(String),
    #[error("parabolic subgroup is not spherical")]
    NotSpherical,
    #[error("the Coxeter group is infinite; a length cap is required")]
    InfiniteGroup,
    #[error("cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("m({0}, {1}) is infinite")]
    InfiniteOrder(usize, usize),
    #[error("alternating word of length {len} exceeds m = {m}")]
    AlternatingTooLong { len: usize, m: u32 },
    #[error("free-group map is not invertible: {0}")]
    NotInvertible(String),
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),
    #[error("invalid parabolic chain: {0}")]
    InvalidChain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
