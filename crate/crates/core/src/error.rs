//! Error type shared by the whole library.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Text input (scalar or presentation) failed to parse.
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("relation cannot be oriented: {0}")]
    NotOrientable(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    /// Rewriting did not terminate within the step budget.
    #[error("normalization exceeded {0} rewrite steps")]
    FuelExhausted(u64),

    /// A rewrite step did not decrease the word in the term order.
    #[error("rewrite rule does not decrease the term order: {0}")]
    NotDecreasing(String),

    /// An element uses a letter outside its presentation.
    #[error("letter index {index} is out of range for {generators} generators")]
    LetterOutOfRange { index: usize, generators: usize },

    /// The rewrite system is not confluent and one round of completion failed.
    #[error("presentation is not confluent: {0}")]
    NotConfluent(String),

    #[error("invalid evaluation point: {0}")]
    InvalidPoint(String),

    #[error("search exceeded the node budget of {0}")]
    NodeBudget(u64),

    #[error("{0}")]
    Invalid(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the failure is a resource limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::FuelExhausted(_) | Error::NodeBudget(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
