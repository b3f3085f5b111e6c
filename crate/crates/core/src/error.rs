//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("assignment has no angle for face size {0}")]
    MissingAngle(u32),

    #[error("not edge-to-edge: edge {{{0}, {1}}} borders {2} face sides")]
    NotEdgeToEdge(usize, usize, usize),

    #[error("tiling is disconnected")]
    Disconnected,

    #[error("malformed face list: {0}")]
    MalformedFace(String),

    #[error("faces around vertex {0} do not form a single disk")]
    NonManifold(usize),

    #[error("faces cannot be oriented consistently")]
    NonOrientable,

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("invalid cupola site: {0}")]
    InvalidSite(String),

    #[error("embedding does not close up: discrepancy {0:e}")]
    ClosureFailure(f64),

    #[error("invalid tiling file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
