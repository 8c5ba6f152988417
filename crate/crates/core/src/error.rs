use thiserror::Error;

/// Everything that can go wrong while assembling descriptors or deciding structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A computation needs cohomology or homology data beyond what is recorded.
    #[error("degree {needed} is beyond the recorded data ({context} is known through degree {available})")]
    UnsupportedDegree {
        needed: usize,
        available: usize,
        context: String,
    },

    /// A catalog constructor was called outside its validity range.
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    /// Classes, subspaces or rings that do not belong together.
    #[error("misuse: {0}")]
    Misuse(String),

    /// Ring data that cannot come from a closed manifold (e.g. a singular cup pairing).
    #[error("corrupt ring data: {0}")]
    CorruptRingData(String),

    /// A witness search would exceed the configured number of candidates.
    #[error("search space of {candidates} candidate pairs exceeds the cap of {cap}")]
    SearchLimit { candidates: u128, cap: u128 },

    /// Two independent derivations disagree. Always a bug.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    /// A manifold expression failed to parse.
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// A catalog document could not be read or failed validation.
    #[error("catalog document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
