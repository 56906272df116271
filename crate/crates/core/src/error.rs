use thiserror::Error;

/// Errors raised by construction, search and certification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid point {0}: points are numbered 1..=7")]
    InvalidPoint(u8),

    #[error("{0} is not a Fano line")]
    InvalidLine(String),

    #[error("invalid ordered pencil: {0}")]
    InvalidPencil(String),

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(String, String),

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is acyclic")]
    Acyclic,

    #[error("operation requires a simple graph, found edge {0}-{1} with multiplicity {2}")]
    Multigraph(usize, usize, usize),

    #[error("search budget of {0} nodes exceeded")]
    SearchBudget(u64),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("verification failed [{check}]: {detail}")]
    Verification { check: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn verification(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Verification {
            check: check.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns a verification error unless `cond` holds.
pub(crate) fn ensure(cond: bool, check: &str, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::verification(check, detail()))
    }
}
