use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {0}–{1}")]
    DuplicateEdge(String, String),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is not a near-bridge")]
    NotNearBridge(usize, usize),
    #[error("graph has no isolated vertex")]
    NoIsolatedVertex,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed graph expression: {0}")]
    MalformedSpec(String),
    #[error("family `{family}` needs n >= {min}, got {n}")]
    FamilyRange {
        family: String,
        n: usize,
        min: usize,
    },
    #[error("{n} vertices exceeds the enumeration guard of {guard}; raise the guard explicitly")]
    GuardExceeded { n: usize, guard: usize },
    #[error("series must have constant term 1")]
    ConstantTerm,
    #[error("polynomial has a nonzero coefficient in degree {0} < 2")]
    LowDegreeTerm(usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("character is zero")]
    ZeroCharacter,
    #[error("character is not integral")]
    NonIntegralCharacter,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}
