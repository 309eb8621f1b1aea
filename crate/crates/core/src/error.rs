use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// A q-product or series was requested beyond the configured size ceiling.
    #[error("size limit exceeded in {op}: {requested} > {limit}")]
    SizeLimit {
        op: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("coefficient index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
