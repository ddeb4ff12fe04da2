use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    Range { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("input outside the problem domain: {0}")]
    Domain(String),

    #[error("contract violated: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
