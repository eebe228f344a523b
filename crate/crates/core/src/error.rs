use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("descriptor mismatch: {0} vs {1}")]
    DescriptorMismatch(String, String),

    #[error("size limit of {limit} elements exceeded")]
    SizeLimit { limit: usize },

    #[error("coordinate hyperplane H[{0}] does not exist when d = 1")]
    NoCoordinateHyperplane(usize),

    #[error("{element} does not stabilize {hyperplane}")]
    NotStabilizing { element: String, hyperplane: String },

    #[error("the arrangement is empty")]
    EmptyArrangement,

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("not a splitting homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("no integral solution")]
    NoIntegralSolution,

    #[error("integer overflow during elimination")]
    Overflow,

    #[error("invalid Frobenius parameters: {0}")]
    InvalidFrobenius(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
