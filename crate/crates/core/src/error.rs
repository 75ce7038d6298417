use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in partition {text:?}: {reason}")]
    Syntax { text: String, reason: String },

    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),

    #[error("parts must be positive")]
    NonPositivePart,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("number of variables differs: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("polynomial is not symmetric: leftover terms after Schur extraction")]
    Asymmetric,

    #[error("negative coefficient in plethystic inner argument")]
    NegativeInner,

    #[error("unknown property {0:?}")]
    UnknownProperty(String),

    /// A computation produced a value that contradicts an exact identity
    /// (non-exact division, negative multiplicity, unstable reduced value).
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
