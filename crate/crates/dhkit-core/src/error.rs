use thiserror::Error;

/// Errors surfaced by the library. Most algorithmic routines are total; the
/// fallible ones are parsers, the brute-force oracles (which refuse inputs
/// beyond their subset-scan limits), and sequence replay.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("{op}: graph on {n} vertices exceeds the limit of {max}")]
    SizeLimit { op: &'static str, n: usize, max: usize },

    #[error("{op}: input graph must be connected")]
    Disconnected { op: &'static str },

    #[error("graph is not distance-hereditary: pruning stalls")]
    NotDistanceHereditary,

    #[error("replay error at step {step}: {reason}")]
    Replay { step: usize, reason: String },

    #[error("partition class is not a module: vertex {vertex} sees it partially")]
    ModuleViolation { vertex: u32 },

    #[error("internal invariant violated: {0}")]
    Contradiction(String),

    #[error("split tree deserialization error: {0}")]
    TreeFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
