use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("order {n} is outside the supported range {}", range_text(*min, *max))]
    OrderOutOfDomain { n: usize, min: usize, max: usize },

    #[error("k = 3 is not supported: no closed form or construction is provided for 3-connected graphs")]
    UnsupportedK3,

    #[error("unsupported connectivity k = {0}")]
    UnsupportedK(usize),

    #[error("no qualifying gadget {name} found for context {context}")]
    GadgetNotFound { name: String, context: String },

    #[error("construction verification failed: {0}")]
    ConstructionFailed(String),

    #[error("gadget catalog: {0}")]
    Catalog(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

fn range_text(min: usize, max: usize) -> String {
    if max == usize::MAX {
        format!("n >= {min}")
    } else {
        format!("{min}..={max}")
    }
}
