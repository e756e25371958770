use std::fmt;

use thiserror::Error;

/// A syntax error in one of the textual grammars, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(input: &str, position: usize, message: impl Into<String>) -> Self {
        ParseError {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let column = self.input[..self.position.min(self.input.len())].chars().count();
        writeln!(f, "parse error at column {}: {}", column + 1, self.message)?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {}^", " ".repeat(column))
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("vertex weights must be positive")]
    ZeroWeight,

    #[error("invalid label {0:?}: labels are nonempty strings over [A-Za-z0-9_] other than \"_\"")]
    InvalidLabel(String),

    #[error("label {0:?} occurs more than once")]
    DuplicateLabel(String),

    #[error("a tree must be either fully labeled or fully unlabeled")]
    MixedLabels,

    #[error("operands use different labeling modes")]
    ModeMismatch,

    #[error("vertex reference does not belong to this tree")]
    ForeignVertex,

    #[error("no vertex labeled {0:?}")]
    UnknownLabel(String),

    #[error("label {0:?} would occur twice in the composite tree")]
    LabelClash(String),

    #[error("graft map does not match the incoming edges of the substituted vertex")]
    GraftMapDomain,

    #[error("parent map does not describe a rooted tree: {0}")]
    NotATree(String),

    #[error("a tree needs at least one vertex")]
    EmptyTree,

    #[error("relabeling is not a bijection on the label set: {0}")]
    NotABijection(String),

    #[error("operation needs a labeled tree")]
    Unlabeled,

    #[error("weight mismatch: slot has weight {slot}, inserted tree has weight {inserted}")]
    WeightMismatch { slot: u64, inserted: u64 },

    #[error("expected {expected} trees, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("negative lambda exponent {0}: the minimal graft map is not minimal")]
    NegativeExponent(i64),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
