use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse affine label {input:?}: bad token {token:?}")]
    LabelParse { input: String, token: String },

    #[error("affine label {0} is not in the affine tables")]
    InvalidLabel(String),

    #[error("cannot parse rational {0:?}")]
    RationalParse(String),

    #[error("weight has {got} coordinates, root system has rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("reflection index {index} out of range for rank {rank}")]
    BadIndex { index: usize, rank: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid affine Weyl group element: {0}")]
    InvalidElement(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("serialization error: {0}")]
    Serde(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
