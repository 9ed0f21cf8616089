use thiserror::Error;

/// Errors raised by the polynomial and automorphism machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in rings with different numbers of variables, or a list
    /// has the wrong length.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// The operation is not defined for this input (e.g. the leading form of zero).
    #[error("undefined for this input: {0}")]
    UndefinedInput(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A polynomial text that could not be parsed. `position` is a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("division by zero")]
    ZeroDenominator,
    #[error("exponent out of range")]
    ExponentTooLarge,
}

pub(crate) fn dimension(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
