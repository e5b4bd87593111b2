use thiserror::Error;

use crate::formula::{Connective, Fragment, Letter};

/// Syntax error with the character offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one element")]
    Empty,
    #[error("expected {expected} element names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("designated index {index} out of range for size {size}")]
    DesignatedOutOfRange { index: usize, size: usize },
    #[error("{connective} table has {found} entries, expected {expected}")]
    TableSize {
        connective: Connective,
        expected: usize,
        found: usize,
    },
    #[error("{connective} table entry {position} is {value}, out of range for size {size}")]
    EntryOutOfRange {
        connective: Connective,
        position: usize,
        value: usize,
        size: usize,
    },
    #[error("matrix has no table for {0}")]
    MissingTable(Connective),
    #[error("letter {0} is not assigned")]
    Unassigned(Letter),
    #[error("letter {letter} is assigned {value}, out of range for size {size}")]
    ValueOutOfRange {
        letter: Letter,
        value: usize,
        size: usize,
    },
    #[error("element set must be non-empty and inside 0..{size}")]
    BadSubset { size: usize },
    #[error("matrix file line {line}: {message}")]
    File { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("fragment {offending} has no finite matrix semantics; use the intuitionistic oracle instead")]
    UnsupportedFragment { offending: Fragment },
    #[error("fragment mismatch: {0}")]
    FragmentMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
    #[error("{0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
