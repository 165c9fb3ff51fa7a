use thiserror::Error;

use crate::diagram::CrossingId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("invalid diagram: {0}")]
    Invalid(String),

    #[error("unknown crossing {0}")]
    UnknownCrossing(CrossingId),

    #[error("component {} out of range for a {count}-component diagram", .index + 1)]
    ComponentOutOfRange { index: usize, count: usize },

    #[error("not a permutation of the {0} components")]
    NotAPermutation(usize),

    #[error("arc labeling does not close up on component {}", .0 + 1)]
    InconsistentLabeling(usize),

    #[error("expected a knot diagram, found {0} component(s)")]
    NotAKnot(usize),

    #[error("expected a {expected}-component diagram, found {found} component(s)")]
    ComponentCount { expected: usize, found: usize },

    #[error("crossing {0} joins two different components")]
    NotSelfCrossing(CrossingId),

    #[error("crossing {0} is a self-crossing of one component")]
    SelfCrossing(CrossingId),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("weight parity mismatch: {0}")]
    ParityMismatch(String),

    #[error("stale move site: {0}")]
    StaleMove(String),

    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("cannot substitute {value} for {var}: a negative power would leave the integers")]
    NonIntegralSubstitution { var: String, value: i64 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// Errors caused by malformed input text rather than by asking an
    /// operation for something its preconditions exclude.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::Invalid(_))
    }
}
