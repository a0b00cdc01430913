//! Crate-wide error type.

/// Errors raised anywhere in the encode / capture / recover chain.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Mask pattern with zero total transmission cannot produce a PSF.
    #[error("degenerate key: mask pattern has zero total transmission")]
    DegenerateKey,

    /// Argument outside its documented domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Array dimensions do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Unregularized inversion of a system with a vanishing spectrum.
    #[error("singular system: frequency response has near-zero entries and regularization is zero")]
    SingularSystem,

    /// Iterative solver produced a non-finite value, usually a sign of bad
    /// penalty parameters.
    #[error("solver diverged: non-finite value at iteration {iteration}")]
    Divergence { iteration: usize },

    /// Codebook training needs a minimum number of samples per codeword.
    #[error("insufficient corpus: need at least {needed} vectors, got {got}")]
    InsufficientCorpus { needed: usize, got: usize },

    /// Malformed container, codebook, or WAV file.
    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
