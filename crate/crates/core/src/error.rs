use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// The variants line up with the CLI exit codes: `Malformed`/`Usage` are
/// caller mistakes, `BudgetExceeded`/`NotFound` mean the search was too
/// small, `Contract`/`Integrity` indicate a bug or a broken table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("token `{token}`: {reason}")]
    Malformed { token: String, reason: String },

    #[error("{0}")]
    Usage(String),

    #[error("budget exceeded: {what} (used {used})")]
    BudgetExceeded { what: String, used: u64 },

    #[error("not found within limit {limit}: {what}")]
    NotFound { what: String, limit: u64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("integrity failure: {0}")]
    Integrity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Malformed { .. } => "malformed",
            Error::Usage(_) => "usage",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::NotFound { .. } => "not-found",
            Error::Contract(_) => "contract",
            Error::Integrity(_) => "integrity",
        }
    }
}
