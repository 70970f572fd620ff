use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("element is not weight-homogeneous of h-weight 0")]
    NotWeightZero,
    #[error("degree {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },
    #[error("weight-space index {index} is outside the truncation depth {depth}")]
    IndexOutOfRange { index: usize, depth: usize },
    #[error("central charge must be nonzero")]
    ZeroCharge,
    #[error("only zero central charge is supported here")]
    NonzeroCharge,
    #[error("central charges do not match")]
    ChargeMismatch,
    #[error("truncation depth {have} is too small, need at least {needed}")]
    InsufficientDepth { needed: usize, have: usize },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::NotWeightZero => "not_weight_zero",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::ZeroCharge => "zero_charge",
            Error::NonzeroCharge => "nonzero_charge",
            Error::ChargeMismatch => "charge_mismatch",
            Error::InsufficientDepth { .. } => "insufficient_depth",
            Error::Invalid(_) => "invalid",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
