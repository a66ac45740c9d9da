//! Error taxonomy shared across the crate.
//!
//! The split mirrors how callers react: input/parse errors are the caller's
//! fault, precondition violations signal misuse of an operation, and
//! contract violations are internal bug detectors (a lemma-backed assertion
//! failed). Feasibility violations are their own kind because they signal a
//! hypothesis violation in the packing construction rather than a bug.

use crate::committee_tree::EdgeSet;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed or out-of-domain input.
    #[error("invalid input: {0}")]
    Input(String),

    /// Text-format parse failure with a 1-based line number.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The instance is valid but outside what the operation supports.
    #[error("unsupported instance: {0}")]
    Unsupported(String),

    /// A size guard was exceeded (exhaustive operations refuse large inputs).
    #[error("size guard exceeded: {0}")]
    Guard(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal lemma-backed assertion failed; this indicates a bug.
    #[error("contract violated: {0}")]
    Contract(String),

    /// The local packing feasibility inequality failed at some node.
    #[error("local feasibility violated: {0}")]
    Feasibility(String),

    /// The cutoff loop got stuck; the witness is a leafless subforest on
    /// which no edge satisfies the removal condition.
    #[error("edge set is illegal for the capacity; stuck witness: {witness}")]
    Illegal { witness: EdgeSet },
}

pub type Result<T> = std::result::Result<T, Error>;
