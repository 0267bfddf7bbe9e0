use thiserror::Error;

use crate::graph::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    Size(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {index} out of range for a graph of order {order}")]
    Index { index: usize, order: usize },
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("total domination number is undefined: vertex {0} is isolated")]
    UndefinedTotalDomination(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
