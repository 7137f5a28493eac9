use std::fmt;

/// Line/column location inside a parsed text input (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum Error {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: Position, message: String },

    #[error("directed graphs are not supported (at {pos})")]
    Directed { pos: Position },

    #[error("duplicate node id {id} at {pos}")]
    DuplicateNode { id: i64, pos: Position },

    #[error("edge at {pos} references undeclared node {id}")]
    UndeclaredNode { id: i64, pos: Position },

    #[error("self-loop on node {id} at {pos}")]
    SelfLoop { id: i64, pos: Position },

    #[error("graph has no nodes")]
    NoNodes,

    #[error("node {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("modularity is undefined for a graph without edges")]
    EmptyGraph,

    #[error("partition has {got} labels but the graph has {expected} nodes")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    #[error("graph size {n} outside the supported range 1..={max} for exhaustive search")]
    OracleRange { n: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
