use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain mismatch: expected [{expected}], found [{found}]")]
    DomainMismatch { expected: usize, found: usize },
    #[error("map is not monotone or out of range: {0:?}")]
    InvalidMap(Vec<usize>),
    #[error("map {0:?} is not surjective")]
    NotSurjective(Vec<usize>),
    #[error("map {0:?} is not injective")]
    NotInjective(Vec<usize>),
    #[error("subset {0:?} does not contain 0")]
    NotPointed(Vec<usize>),
    #[error("subsets live in different ambient sets [{0}] and [{1}]")]
    AmbientMismatch(usize, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("dangling simplex reference: {0}")]
    Dangling(String),
    #[error("invalid simplicial set: {0}")]
    InvalidSSet(String),
    #[error("subcomplex is not closed under faces: {0}")]
    NotSubcomplex(String),
    #[error("cannot collapse an empty subcomplex")]
    EmptySubcomplex,
    #[error("gradient direction must sum to zero")]
    Unbalanced,
    #[error("input is zero")]
    Zero,
    #[error("not a chain map in degree {degree}: {witness}")]
    NotChainMap { degree: usize, witness: String },
    #[error("stabilization failed: {0}")]
    Stabilization(String),
    #[error("colimit: {0}")]
    Colimit(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
