use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unrealizable degree type: {0}")]
    InvalidType(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("vertex reference does not resolve: {0}")]
    BadVertex(String),

    #[error("hook length is only defined for internal vertices")]
    LeafVertex,

    #[error("multinomial parts sum to {sum}, expected {top}")]
    MultinomialMismatch { top: u64, sum: u64 },

    #[error("invalid vertex polynomial parameters d={d}, h={h}")]
    VertexPoly { d: u64, h: u64 },

    #[error("invalid labelled forest: {0}")]
    Labelling(String),

    #[error("invalid coloring: {0}")]
    Coloring(String),

    #[error("partition error: {0}")]
    Partition(String),

    #[error("partitions are not adjacent")]
    NotAdjacent,

    #[error("code entry out of bounds: {0}")]
    CodeOutOfBounds(String),

    #[error("minimum label is not in the first tree")]
    MinimumNotInFirstTree,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
