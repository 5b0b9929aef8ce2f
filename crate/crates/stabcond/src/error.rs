use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: d={0} vs d={1}")]
    DimensionMismatch(i64, i64),
    #[error("invalid stabilizer: generators {0} and {1} do not commute (symplectic product {2})")]
    InvalidStabilizer(usize, usize, i64),
    #[error("scalar obstruction: a product of generators equals w^{phase} times the identity")]
    ScalarObstruction { phase: i64 },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown lattice element: {0}")]
    UnknownElement(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("incompatible model: {0}")]
    Incompatible(String),
    #[error("non-gappable configuration: {0}")]
    NonGappable(String),
    #[error("not condensable: {0}")]
    NotCondensable(String),
    #[error("inconsistent delta record: {0}")]
    InconsistentDelta(String),
    #[error("brute-force cap exceeded: Hilbert dimension {0} > 2^20")]
    CapExceeded(String),
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid anyon label: {0}")]
    InvalidLabel(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("inconsistent relations: {0}")]
    InconsistentRelations(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
