use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. The CLI maps these onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed call: mixed fields, zero polynomial where forbidden, bad script.
    #[error("usage error: {0}")]
    Usage(String),
    /// Argument outside the range where the formula is valid.
    #[error("range error: {0}")]
    Range(String),
    /// Inputs outside the mathematical domain (g < 10, inadmissible tuple, p too small).
    #[error("domain error: {0}")]
    Domain(String),
    /// Fibre type and divisor pattern do not fit together.
    #[error("classification error: {0}")]
    Classification(String),
    /// Soft failure that asks the caller to draw fresh randomness.
    #[error("resample: {0}")]
    Resample(String),
    /// Retry budget exhausted while building a curve.
    #[error("construction failed after {attempts} attempts: {}", .trace.join("; "))]
    ConstructionFailed { attempts: usize, trace: Vec<String> },
    /// Malformed serialized document.
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
