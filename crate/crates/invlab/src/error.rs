use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input file. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A precondition on the operation's arguments does not hold.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// The instance is larger than the operation's documented cap.
    #[error("{what} is capped at {limit}, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    /// A greedy embedding ran out of candidate vertices.
    #[error("embedding failed: {0}")]
    EmbeddingFailed(String),

    /// A retry-and-verify procedure used up its retry budget.
    #[error("retries exhausted after {attempts} attempts: {last_failure}")]
    RetriesExhausted { attempts: u64, last_failure: String },

    /// A construction produced an object that failed its final check.
    /// This indicates a bug in the construction, not bad input.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
