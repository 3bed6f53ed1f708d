use thiserror::Error;

pub type Result<T> = std::result::Result<T, TropError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error("parse error at position {position}: expected {expected}, found {found:?}")]
    Parse {
        position: usize,
        expected: String,
        found: String,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix must be square and nonempty")]
    NotSquare,

    #[error("operation requires a 2x2 matrix, got {0}x{0}")]
    RequiresTwoByTwo(usize),

    /// `-inf - -inf` has no value; the zero vector has no projective image.
    #[error("difference of two -inf values is undefined")]
    UndefinedDifference,

    #[error("sets {0} and {1} are not isometric")]
    NotIsometric(String, String),

    #[error("matrices are not D-related")]
    NotDRelated,

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("vector is not in the column space of the idempotent")]
    NotInImage,

    #[error("H-class R_{0} n L_{1} contains no idempotent")]
    NoIdempotent(String, String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("an ideal needs at least one generator")]
    EmptyGenerators,

    /// A constructed witness failed its exact post-check. Always a defect.
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
}

impl TropError {
    pub(crate) fn parse(
        position: usize,
        expected: impl Into<String>,
        found: impl Into<String>,
    ) -> Self {
        TropError::Parse {
            position,
            expected: expected.into(),
            found: found.into(),
        }
    }
}
