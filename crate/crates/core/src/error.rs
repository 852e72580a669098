use thiserror::Error;

/// Errors raised by the constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radical elements live over different bases")]
    BasisMismatch,

    #[error("radical basis square b_{0} is zero")]
    ZeroSquare(usize),

    #[error(
        "exact zero test refused: basis is not independent and the element mixes related monomials"
    )]
    DegenerateBasis,

    #[error("root choice for generator {0} does not square to its basis value")]
    InconsistentRoots(usize),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("all coordinates of a projective point are zero")]
    ZeroPoint,

    #[error("degenerate line: spanning points are projectively equal")]
    DegenerateLine,

    #[error("quadric has no nonzero coefficient")]
    ZeroQuadric,

    #[error("entries are not pairwise distinct: {0}")]
    Duplicate(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("points are not in general position: {0}")]
    GeneralPosition(String),

    #[error("curve is singular: maximal minor on columns {0:?} vanishes")]
    Singular(Vec<usize>),

    #[error("degenerate net: section by x_{0} = 0 is not a single point of the y-space")]
    DegenerateNet(usize),

    #[error("non-generic section: hyperplane x_{hyperplane} section has y_{index} = 0")]
    NonGeneric { hyperplane: usize, index: usize },

    #[error("anomaly: {0}")]
    Anomaly(String),

    #[error("not a (16,6)-configuration")]
    NotConfiguration,

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("parity: type n = {0} must be odd and at least 5")]
    Parity(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("numeric value cannot be matched to a rational: {0}")]
    Unmatched(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
