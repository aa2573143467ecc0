//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("group dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    #[error("block index m={m} out of range 2..={n}")]
    BlockIndexOutOfRange { m: usize, n: usize },

    #[error("parameter vector for SU({n}) needs {expected} entries, got {got}")]
    ParamLength {
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("theta vector for dimension {n} needs {expected} entries, got {got}")]
    ThetaLength {
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("theta[{index}] = {value} lies outside [{lo}, {hi}]")]
    ThetaOutOfRange {
        index: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("monte carlo estimate needs at least {min} samples, got {got}; increase the sample count")]
    TooFewSamples { min: u64, got: u64 },

    #[error("worker count must be at least 1")]
    NoWorkers,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable code for CLI/FFI error reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidDimension(_) => "invalid_dimension",
            Error::BlockIndexOutOfRange { .. } => "block_index_out_of_range",
            Error::ParamLength { .. } => "param_length",
            Error::ThetaLength { .. } => "theta_length",
            Error::ThetaOutOfRange { .. } => "theta_out_of_range",
            Error::TooFewSamples { .. } => "too_few_samples",
            Error::NoWorkers => "no_workers",
            Error::Inconsistent(_) => "internal_inconsistency",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}
