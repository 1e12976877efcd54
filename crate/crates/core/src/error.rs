use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("term {term} at position {position} is not below the sequence length {len}")]
    TermTooLarge { position: usize, term: usize, len: usize },
    #[error("index {index} is out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("cannot lay off a positive term from a one-term sequence")]
    SingleTermLayoff,
    #[error("laying off position {k} drives position {position} below zero")]
    NegativeResidual { k: usize, position: usize },
    #[error("malformed sequence text: {0}")]
    Parse(String),
    #[error("sequence ({0}) is not graphic")]
    NotGraphic(String),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("H needs {needed} vertices but the pattern only has {m}")]
    PatternTooSmall { needed: usize, m: usize },
    #[error("unknown pattern family `{0}`")]
    UnknownFamily(String),
    #[error("no closed-form value is known for K_m - {0}")]
    NoFormula(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("oracle incomplete: realization search for ({sequence}) hit the limit of {limit}")]
    OracleIncomplete { sequence: String, limit: usize },
}
