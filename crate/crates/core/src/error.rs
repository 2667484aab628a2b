use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} out of range for ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{what}: size {size} exceeds the limit of {limit}{hint}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("node budget of {budget} exhausted; raise it (MATROIDAL_NODE_BUDGET) or use a smaller input")]
    Budget { budget: u64 },

    #[error("graph is not connected ({components} components)")]
    NotConnected { components: usize },

    #[error("characteristic polynomial does not vanish at 1 (remainder {remainder}); the matroid has loops or is empty")]
    NonZeroRemainder { remainder: String },

    #[error("cannot reverse a polynomial of degree {degree} at top degree {top}")]
    ReverseDegree { top: usize, degree: usize },

    #[error("vector configuration does not span its ambient space (rank {rank}, dimension {dim})")]
    NotSpanning { rank: usize, dim: usize },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Resource exhaustion rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::Budget { .. })
    }
}
