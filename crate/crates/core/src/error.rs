use std::io;

use thiserror::Error;

pub type Result<T, E = CipError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CipError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge after {iterations} iterations")]
    Convergence {
        what: &'static str,
        iterations: usize,
    },

    #[error("node {node} has zero variance across its centrality values")]
    DegenerateColumn { node: String },

    #[error("cannot orient factor axes: both axes correlate equally with betweenness")]
    AmbiguousOrientation,

    #[error("degenerate factor structure: {0}")]
    Degenerate(String),
}

impl CipError {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            CipError::Io(_) => 2,
            CipError::Convergence { .. } => 4,
            _ => 3,
        }
    }

    /// Short machine-readable kind tag.
    pub fn kind(&self) -> &'static str {
        match self {
            CipError::Io(_) => "io",
            CipError::Parse { .. } => "parse",
            CipError::Validation(_) => "validation",
            CipError::Domain(_) => "domain",
            CipError::Convergence { .. } => "convergence",
            CipError::DegenerateColumn { .. } => "degenerate-column",
            CipError::AmbiguousOrientation => "ambiguous-orientation",
            CipError::Degenerate(_) => "degenerate",
        }
    }
}
