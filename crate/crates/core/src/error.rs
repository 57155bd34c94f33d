use alloc::string::String;

/// Everything that can go wrong inside the core crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("{what} of size {size} exceeds the bound {limit}")]
    SizeBound {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("matrix orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
