use thiserror::Error;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Precondition,
    NeedsInput,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("graph is disconnected (vertex `{0}` unreachable)")]
    Disconnected(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("intersection form is not negative definite{hint}")]
    NotNegativeDefinite { hint: String },
    #[error("cycle has {got} coefficients but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cycle is not integral")]
    NotIntegral,
    #[error("cycle is zero")]
    ZeroCycle,
    #[error("cycle is not antinef: (l, E_{vertex}) = {value} > 0")]
    NotAntinef { vertex: String, value: String },
    #[error("{0}")]
    Precondition(String),
    #[error("graph does not support a splice-quotient structure: {0}")]
    NotSpliceApplicable(String),
    #[error("graph is not star-shaped: {0}")]
    NotStarShaped(String),

    #[error("needs input: {0}")]
    NeedsInput(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } => ErrorClass::Parse,
            Error::NeedsInput(_) => ErrorClass::NeedsInput,
            _ => ErrorClass::Precondition,
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
