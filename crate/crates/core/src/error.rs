use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument {value} exceeds the supported maximum {max} for {what}")]
    InputTooLarge {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("basis family is not a matroid: {0}")]
    NotAMatroid(String),

    #[error("flat lattice violates the cover-partition axiom at level {level}, flat {flat}: {reason}")]
    FlatAxiom { level: usize, flat: String, reason: String },

    #[error("matroid text, line {line}: {reason}")]
    Syntax { line: usize, reason: String },

    #[error("matroid text: duplicate basis {0}")]
    DuplicateBasis(String),

    #[error("matroid text: basis {basis} has {found} elements, expected rank {rank}")]
    WrongPopcount { basis: String, found: usize, rank: usize },

    #[error("matroid text: basis exchange fails ({0})")]
    ExchangeFailure(String),

    #[error("node budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
