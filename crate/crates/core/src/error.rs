use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input. `offset` is the byte position of the problem.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Input larger than an operation supports.
    #[error("unsupported size: {what} is {size}, limit is {limit}")]
    UnsupportedSize {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// An argument violates the operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A family of sets is not an antichain.
    #[error("not a clutter: {smaller:?} is contained in {larger:?}")]
    NotAClutter { smaller: Vec<u32>, larger: Vec<u32> },

    /// The configured work limit of an exhaustive enumeration was reached.
    #[error("work limit exceeded after examining {examined} subsets")]
    WorkLimit { examined: u64 },
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
