use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} appears in more than one block")]
    Overlap(usize),
    #[error("element {0} of the ground set is not covered by any block")]
    Gap(usize),
    #[error("element {element} lies outside the ground set [1, {ground}]")]
    OutOfRange { element: usize, ground: usize },
    #[error("empty block")]
    EmptyBlock,
    #[error("ground sizes differ ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("diagram kinds or strand counts differ")]
    ShapeMismatch,
    #[error("refinement violated: block {block:?} of the shape is split by the ties")]
    Refinement { block: Vec<usize> },
    #[error("{0} is not a block of the diagram")]
    NotABlock(String),
    #[error("element is not a member of {0}")]
    Membership(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("token `{token}` expects {expected} index(es), got {got}")]
    Arity {
        token: String,
        expected: usize,
        got: usize,
    },
    #[error("context `{context}` does not interpret `{token}`")]
    Uninterpreted { context: String, token: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown context `{0}`")]
    UnknownContext(String),
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("enumeration bound {bound} exceeded")]
    BoundExceeded { bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
