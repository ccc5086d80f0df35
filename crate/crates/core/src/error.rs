use thiserror::Error;

/// Errors raised by loading, solving and generating.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    Schema(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("distance matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("distance matrix has invalid entry at ({0}, {1}): {2}")]
    InvalidDistance(usize, usize, String),
    #[error("graph metric is disconnected")]
    DisconnectedGraphMetric,
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("invalid connectivity edge ({0}, {1})")]
    BadEdge(usize, usize),
    #[error("point id {0} out of range")]
    PointOutOfRange(usize),
    #[error("connectivity graph is not a path")]
    NotAPath,
    #[error("connectivity graph is not a tree")]
    NotATree,
    #[error("center objective requires centers")]
    MissingCenters,
    #[error("partition does not match the center set")]
    PartitionMismatch,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("oracle limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for failures of an algorithm's structural precondition (as opposed
    /// to malformed input or an infeasible request).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotAPath
                | Error::NotATree
                | Error::MissingCenters
                | Error::PartitionMismatch
                | Error::Precondition(_)
                | Error::LimitExceeded(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
