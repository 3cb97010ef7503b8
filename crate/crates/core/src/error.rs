use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge endpoint {endpoint} out of range for order {order}")]
    EndpointOutOfRange { endpoint: usize, order: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("labeling has {labels} labels but graph has order {order}")]
    LengthMismatch { labels: usize, order: usize },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("no distance labeling of length at most {l_max} exists")]
    LengthBoundExceeded { l_max: u32 },

    #[error("node budget of {0} exhausted before the search finished")]
    BudgetExceeded(u64),

    #[error("max order {requested} exceeds the cap of {cap}")]
    OrderCapExceeded { requested: usize, cap: usize },

    #[error("no constructive labeling covers this family: {0}")]
    UncoveredFamily(String),

    #[error("invalid delta set: {0}")]
    InvalidDeltaSet(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}
