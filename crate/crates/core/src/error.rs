use thiserror::Error;

/// Syntax or content error in a family or hitting-set file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("graph `{0}` has no edges")]
    EmptyGraph(String),
    #[error("duplicate graph name `{0}`")]
    DuplicateGraph(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("unexpected end of input: {0}")]
    UnexpectedEof(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graph `{graph}` is disconnected: vertex `{vertex}` is unreachable from `{root}`")]
    Disconnected {
        graph: String,
        root: String,
        vertex: String,
    },
    #[error("graph `{0}` is not a tree")]
    NotATree(String),
    #[error("tree `{0}` is a path")]
    IsPath(String),
    #[error("graph `{0}` is not a cycle")]
    NotACycle(String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} is outside the universe of {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("graph `{0}` is not defined over the family's vertex universe")]
    UniverseMismatch(String),
    #[error("family is empty")]
    EmptyFamily,
    #[error("unknown graph `{0}`")]
    UnknownGraph(String),
    #[error("universe has {n} vertices, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("radius {r} outside 0..={diameter}")]
    RadiusOutOfRange { r: usize, diameter: usize },
    #[error("vertex set is not a metric basis of `{0}`")]
    NotABasis(String),
    #[error("invalid edge exchange: {0}")]
    InvalidExchange(String),
    #[error("invalid exchange at step {step}: {reason}")]
    InvalidExchangeStep { step: usize, reason: String },
    #[error("dimension bound violated: {0}")]
    BoundViolated(String),
    #[error("invalid hitting-set instance: {0}")]
    InvalidInstance(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("graph is not a member of G_f: {0}")]
    NotInFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
