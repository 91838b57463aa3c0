use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {index} has a negative entry")]
    NegativeEntry { index: usize },
    #[error("generator {index} is the zero vector (0 is implicit)")]
    ZeroGenerator { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("axis {axis} out of range for dimension {n}")]
    AxisOutOfRange { axis: usize, n: usize },
    #[error("no generator lies on coordinate axis {axis}")]
    NotSimplicial { axis: usize },
    #[error("not a numerical semigroup (need n = 1 and gcd 1)")]
    NotNumerical,
    #[error("not the S-tilde of a Gorenstein numerical semigroup: {0}")]
    NotRealizable(String),
    #[error("root table is trivial at degree {degree}")]
    NoRoots { degree: i64 },
    #[error("fingerprints were computed under different bounds or dimensions")]
    BoundMismatch,
    #[error("root table not closed under brackets in the window: {0}")]
    InconsistentTruncation(String),
    #[error("membership box too large: {points} points")]
    BoxTooLarge { points: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
