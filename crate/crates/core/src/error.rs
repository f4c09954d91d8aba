use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("action of element {0} is not an automorphism")]
    NotAnAutomorphism(usize),

    #[error("action is not a homomorphism at ({0}, {1})")]
    NotAHomomorphism(usize, usize),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot resolve element `{0}`")]
    UnknownElement(String),
}

impl Error {
    pub(crate) fn params(family: &str, reason: impl Into<String>) -> Self {
        Error::InvalidParameters {
            family: family.to_string(),
            reason: reason.into(),
        }
    }
}
