use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed arities: expected component {expected}, found {found}")]
    MixedComponents { expected: String, found: String },

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("generator {0} is not part of the declared signature")]
    ForeignGenerator(String),

    #[error("label {0} is not a leaf of the tree")]
    NotALeaf(u32),

    #[error("label {0} occurs on both sides of a composition")]
    LabelClash(u32),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("the label set is empty")]
    EmptyLabelSet,

    #[error("arity {found} is below the minimum {minimum}")]
    ArityTooSmall { minimum: usize, found: usize },

    #[error("span is not stable under the action: row with pivot {0} leaves the span")]
    UnstableSpan(String),

    #[error("expected a trivial or bullet-rooted tree tensor, got {0}")]
    NotBulletRooted(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("series error: {0}")]
    Series(String),

    #[error("{0} exceeds the resource cap")]
    ResourceCap(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("{0} is not a permutation of the label set")]
    BadPermutation(String),
}
