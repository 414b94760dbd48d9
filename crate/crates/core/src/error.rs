use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("element index {index} out of range for carrier of size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("the zero element {0} must not belong to the fixed-point set")]
    ZeroInSubset(usize),

    #[error("distinguished elements must differ (both are {0})")]
    EqualDistinguished(usize),

    #[error("carrier of size {n} is too small, need at least {min}")]
    CarrierTooSmall { n: usize, min: usize },

    #[error("distinguished element {0} is not in the subset")]
    DistinguishedNotInSubset(usize),

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("family {family} requires parameter `{param}`")]
    MissingParameter {
        family: &'static str,
        param: &'static str,
    },

    #[error("family {family} does not take parameter `{param}`")]
    UnexpectedParameter {
        family: &'static str,
        param: &'static str,
    },

    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),

    #[error("structure is not a dimonoid: {0}")]
    NotADimonoid(String),

    #[error("operation is not associative: witness {0:?}")]
    NotAssociative([usize; 3]),

    #[error("semigroup is not right commutative: witness {0:?}")]
    NotRightCommutative([usize; 3]),

    #[error("size {n} exceeds the supported bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("not a bijection on the carrier: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("fixed points and blocks do not partition the carrier: {0}")]
    BadPartition(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {reason}")]
    Format { line: usize, reason: String },
}

impl Error {
    /// Stable machine-readable identifier, used in JSON error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyCarrier => "empty_carrier",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::ZeroInSubset(_) => "zero_in_subset",
            Error::EqualDistinguished(_) => "equal_distinguished",
            Error::CarrierTooSmall { .. } => "carrier_too_small",
            Error::DistinguishedNotInSubset(_) => "distinguished_not_in_subset",
            Error::EmptySubset => "empty_subset",
            Error::MissingParameter { .. } => "missing_parameter",
            Error::UnexpectedParameter { .. } => "unexpected_parameter",
            Error::InvalidParameters(_) => "invalid_parameters",
            Error::NotADimonoid(_) => "not_a_dimonoid",
            Error::NotAssociative(_) => "not_associative",
            Error::NotRightCommutative(_) => "not_right_commutative",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::NotAPermutation(_) => "not_a_permutation",
            Error::BadPartition(_) => "bad_partition",
            Error::Parse { .. } => "parse_error",
            Error::Io { .. } => "io_error",
            Error::Format { .. } => "format_error",
        }
    }
}
