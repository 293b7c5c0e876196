use thiserror::Error;

use crate::lattice::LatticeError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyInput,
    #[error("generator {index} has a negative entry")]
    NegativeEntry { index: usize },
    #[error("generator {index} is the zero vector")]
    ZeroGenerator { index: usize },
    #[error("generators {first} and {second} coincide")]
    DuplicateGenerator { first: usize, second: usize },
    #[error("expected a vector of length {expected}, found length {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the cone is not simplicial ({rays} extreme rays, rank {rank})")]
    NotSimplicial { rays: usize, rank: usize },
    #[error("vector is outside the rational span of the frame")]
    OutsideSpan,
    #[error("the semigroup is not homogeneous")]
    NotHomogeneous,
    #[error("generators are not minimal: redundant generator indices {0:?}")]
    NonMinimalGenerators(Vec<usize>),
    #[error("frame element {index} has degree {degree}, expected 1")]
    FrameDegree { index: usize, degree: String },
    #[error("{0} is not a valid field characteristic (0 or a prime)")]
    InvalidCharacteristic(u64),
    #[error("intermediate values exceed 128 bits")]
    TooLarge,
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl Error {
    /// Stable name of the error variant, used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::ZeroGenerator { .. } => "ZeroGenerator",
            Error::DuplicateGenerator { .. } => "DuplicateGenerator",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSimplicial { .. } => "NotSimplicial",
            Error::OutsideSpan => "OutsideSpan",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::NonMinimalGenerators(_) => "NonMinimalGenerators",
            Error::FrameDegree { .. } => "FrameDegree",
            Error::InvalidCharacteristic(_) => "InvalidCharacteristic",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::TooLarge => "TooLarge",
            Error::Lattice(_) => "Lattice",
        }
    }

    /// Whether the error is a violated precondition of an algorithm (as
    /// opposed to malformed input).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotSimplicial { .. }
                | Error::NotHomogeneous
                | Error::NonMinimalGenerators(_)
                | Error::FrameDegree { .. }
        )
    }
}
