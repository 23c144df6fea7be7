use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration field violates its invariant. `field` names the
    /// offending field (e.g. `users[1].L`).
    #[error("invalid config: field `{field}`: {reason}")]
    InvalidConfig { field: String, reason: String },

    /// An operation was called outside its stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Matrix/vector shapes do not line up.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An index argument is outside its valid range.
    #[error("index out of range: {0}")]
    OutOfRange(String),

    /// Combinatorial scheme sizes exceed what fits in machine integers.
    #[error("scheme size overflow: {0}")]
    Overflow(String),

    /// A linear system was too ill-conditioned to solve reliably.
    #[error("singular system: condition estimate {cond:.3e} exceeds threshold")]
    Singular { cond: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid_config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidConfig {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
