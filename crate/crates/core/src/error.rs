use thiserror::Error;

/// Errors produced by the computational core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input text does not match the group-expression grammar.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A value is outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A construction would exceed a configured resource limit.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A class-data file violates the schema.
    #[error("class data error at line {line}: {msg}")]
    ClassData { line: usize, msg: String },

    /// An integer result does not fit the result type.
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
