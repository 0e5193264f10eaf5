use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("boundaries must start at 0 and be strictly increasing")]
    InvalidBoundaries,

    #[error("value matrix must be square with one row per cell")]
    DimensionMismatch,

    #[error("graphon values must be symmetric")]
    AsymmetricValues,

    #[error("kernel value {0} outside the allowed range")]
    ValueOutOfRange(f64),

    #[error("intensity {0} must be nonnegative")]
    NegativeIntensity(f64),

    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("parameter {name} = {value} is invalid: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("adjacency point set is not symmetric: ({0}, {1}) has no mirror point")]
    AsymmetricAdjacency(f64, f64),

    #[error("graph with {vertices} vertices is too large to canonicalize (cap {cap})")]
    CanonicalizationCap { vertices: usize, cap: usize },

    #[error("enumeration over {vertices} vertices exceeds the oracle cap {cap}")]
    EnumerationCap { vertices: usize, cap: usize },

    #[error("stretched metric undefined for zero graphon")]
    ZeroGraphon,

    #[error("undefined for zero graphex")]
    ZeroGraphex,

    #[error("refinement needs {required} cells, exceeding cap {cap}; raise the cap to at least {required}")]
    RefinementCapExceeded { required: usize, cap: usize },

    #[error("vertex index {index} out of range for graph on {vertices} vertices")]
    VertexOutOfRange { index: usize, vertices: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for cap/budget errors, which the CLI maps to a distinct exit code.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::CanonicalizationCap { .. }
                | Error::EnumerationCap { .. }
                | Error::RefinementCapExceeded { .. }
        )
    }
}
