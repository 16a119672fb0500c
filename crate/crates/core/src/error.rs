//! Error type shared across the crate.

use thiserror::Error;

/// Errors returned by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The morphism spec text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A symbol is not a single printable alphanumeric character.
    #[error("unknown character class for symbol {0:?}")]
    BadSymbol(char),
    /// A rule head appears more than once in a morphism spec.
    #[error("duplicate rule head {0:?}")]
    DuplicateRule(char),
    /// A symbol is not part of the expected alphabet.
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    /// Alphabets do not line up for composition or application.
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    /// The operation needs an endomorphism (domain equal to codomain).
    #[error("operation requires an endomorphism")]
    NotEndomorphism,
    /// A query exceeded the built horizon of a factor language.
    #[error("word length {requested} exceeds the built horizon {horizon}")]
    Horizon { requested: usize, horizon: usize },
    /// A sequence generator cannot produce an infinite sequence.
    #[error("degenerate generator: {0}")]
    DegenerateGenerator(String),
    /// A stated precondition of the operation does not hold.
    #[error("precondition not met: {0}")]
    Precondition(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
