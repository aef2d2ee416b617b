use thiserror::Error;

/// Errors shared by the lattice, engine and sequence layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index or argument outside the defined domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A (sequence id, evaluation route) pair that is not implemented.
    #[error("no {route} route for sequence {id}")]
    Capability { id: String, route: String },

    /// Malformed complex or fixture file, with a 1-based line number.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The exact-cover oracle refuses complexes above its reference scale.
    #[error("exact-cover oracle limited to {limit} cells, got {cells}")]
    OracleTooLarge { cells: usize, limit: usize },

    /// Generating-function denominator whose constant term is not ±1.
    #[error("generating function needs a unit constant term in the denominator, got {0}")]
    NonUnitConstantTerm(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
