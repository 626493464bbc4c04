use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ordinal [{0}]: index must be at least -1")]
    InvalidOrdinal(i64),
    #[error("{what} {value} out of range 0..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        max: i64,
    },
    #[error("map is not monotone at position {0}")]
    NotMonotone(usize),
    #[error("domain/codomain mismatch: {0}")]
    Mismatch(String),
    #[error("no {0} adjoint: the map does not preserve the {1} element")]
    NoAdjoint(&'static str, &'static str),
    #[error("not an interval map: {0}")]
    NotInterval(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("not a globular set: {0}")]
    NotGlobular(String),
    #[error("globular set is not a cardinal: {0}")]
    NotCardinal(String),
    #[error("vertices are not consecutive: {0}")]
    NotConsecutive(String),
    #[error("cells are not composable: {0}")]
    NotComposable(String),
    #[error("invalid cell: {0}")]
    InvalidCell(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
