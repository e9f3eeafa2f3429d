use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{what} refuses n = {n}: enumeration cap is {cap} (use a cap override to go further)")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("singular input: {0}")]
    Singular(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point is not on the plane x·1 = 0 (coordinate sum is {0})")]
    NotOnPlane(String),

    #[error("coordinate sum {0} is odd; not a point of the D lattice")]
    ParityViolation(String),

    #[error("polytope has no half-space representation")]
    MissingHrep,

    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
