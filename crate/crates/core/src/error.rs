use thiserror::Error;

/// A coset enumeration would have exceeded the configured budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("enumeration of 2^{dimension} = {} elements exceeds the limit of {cap}", required(*.dimension))]
pub struct EnumerationLimit {
    pub dimension: usize,
    pub cap: u64,
}

fn required(dimension: usize) -> String {
    if dimension < 128 {
        (1u128 << dimension).to_string()
    } else {
        format!("2^{dimension}")
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Enumeration(#[from] EnumerationLimit),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("complex has no homological generator (is it a formal knot complex?)")]
    NoHomologicalGenerator,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
