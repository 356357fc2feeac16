use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Error)]
pub enum SurfError {
    #[error("cannot parse rational from {0:?} (expected \"p/q\" or \"p\")")]
    BadRational(String),

    #[error("multiplicity {0} outside [0, 1]")]
    MultiplicityRange(String),

    #[error("component genus {0} not supported (only 0 and 1)")]
    GenusTooLarge(u32),

    #[error("operation requires a chain configuration")]
    NotAChain,

    #[error("complementary index {0} is not regular (must be one of 1, 2, 3, 4, 6)")]
    NotRegularIndex(u32),

    #[error("invalid curve configuration: {0}")]
    InvalidCurve(String),

    #[error("invalid dual graph: {0}")]
    InvalidGraph(String),

    #[error("crepant system is singular: exceptional locus is not contractible")]
    CrepantSingular,

    #[error("invalid fiber model: {0}")]
    InvalidFiber(String),

    #[error("invalid type data: {0}")]
    InvalidLabel(String),

    #[error("defect is negative ({0}): relative Picard rank below degree bound")]
    NegativeDefect(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("unknown named configuration {0:?}")]
    UnknownConfig(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
