use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("identity is not at index 0")]
    NoIdentityAtZero,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("operation is not associative: ({0}·{1})·{2} differs from {0}·({1}·{2})")]
    NotAssociative(usize, usize, usize),
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("set is not a subgroup")]
    NotASubgroup,
    #[error("set is not a subdigroup")]
    NotASubdigroup,
    #[error("set is not an ideal")]
    NotAnIdeal,
    #[error("digroup is not a left skew brace")]
    NotABrace,
    #[error("element {0} does not belong to the required component")]
    ElementNotInComponent(usize),
    #[error("kernel is not invariant: {0}")]
    KernelNotInvariant(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid decomposition: {0}")]
    DecompositionInvalid(String),
    #[error("map is not a bijection on pairs")]
    NotABijection,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{context}: {source}")]
    Validation {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn validation(context: impl Into<String>, source: Error) -> Self {
        Error::Validation {
            context: context.into(),
            source: Box::new(source),
        }
    }

    /// True when the error means the input itself is malformed (a bad file,
    /// a table that is not a group), as opposed to a well-formed input that
    /// fails a mathematical property.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedTable(_)
                | Error::NoIdentityAtZero
                | Error::MissingInverse(_)
                | Error::NotAssociative(..)
                | Error::IndexOutOfRange { .. }
                | Error::SizeMismatch { .. }
                | Error::UnknownName(_)
                | Error::InvalidAction(_)
                | Error::NotABijection
                | Error::Parse { .. }
                | Error::Validation { .. }
        )
    }
}
