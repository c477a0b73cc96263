use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,

    #[error("pole at u = {0}")]
    Pole(String),

    #[error("invalid parity sequence: {0}")]
    InvalidParity(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid leg index {leg} for an operator with {legs} legs")]
    InvalidLeg { leg: usize, legs: usize },

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("not a highest vector: t_{{{i},{j}}}(u) does not annihilate it")]
    NotHighestVector { i: usize, j: usize },

    #[error("highest vector is not an eigenvector of t_{{{i},{i}}}(u)")]
    NotEigenvector { i: usize },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("weight is not normalized: last component is {0}, expected 0")]
    NotNormalized(String),

    #[error("parity sequence {0} is not standard")]
    NonStandardParity(String),

    #[error("target parity {target} is not reachable from {source_parity}")]
    UnreachableParity { source_parity: String, target: String },

    #[error("cardinality mismatch: {0} vs {1}")]
    CardinalityMismatch(usize, usize),

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid hook partition: {0}")]
    InvalidPartition(String),

    #[error("search too large: {0}")]
    SearchTooLarge(String),

    #[error("singular matrix")]
    Singular,

    #[error("could not find an admissible sample after {0} attempts")]
    SamplesExhausted(usize),
}

impl Error {
    /// Stable machine-readable code for CLI reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ParseRational(_) | Error::ZeroDenominator => "E_RATIONAL",
            Error::NotInvertible => "E_SERIES",
            Error::Pole(_) => "E_POLE",
            Error::InvalidParity(_) | Error::NonStandardParity(_) | Error::UnreachableParity { .. } => {
                "E_PARITY"
            }
            Error::Dimension(_) | Error::InvalidLeg { .. } | Error::CardinalityMismatch(..) => {
                "E_DIMENSION"
            }
            Error::InvalidModule(_) => "E_MODULE",
            Error::NotHighestVector { .. } | Error::NotEigenvector { .. } => "E_HIGHEST_VECTOR",
            Error::InvalidWeight(_) | Error::NotNormalized(_) | Error::ContextMismatch(_) => "E_WEIGHT",
            Error::InvalidPartition(_) => "E_PARTITION",
            Error::SearchTooLarge(_) => "E_GUARD",
            Error::Singular => "E_SINGULAR",
            Error::SamplesExhausted(_) => "E_SAMPLES",
        }
    }
}
