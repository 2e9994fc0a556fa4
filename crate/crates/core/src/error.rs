use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    #[error("invalid measurement: {0}")]
    InvalidPovm(String),

    #[error("label states are indistinguishable (trace distance {distance:e})")]
    IndistinguishableStates { distance: f64 },

    #[error("degenerate noise rates: eta0 + eta1 = {sum} must be < 1")]
    DegenerateNoise { sum: f64 },

    #[error("unknown instance `{0}`")]
    UnknownInstance(String),

    #[error("enumeration limit exceeded for {what}: {size} > {limit}")]
    EnumerationLimit { what: &'static str, size: u128, limit: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty sample")]
    EmptySample,

    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("specification error: {0}")]
    Spec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the failure is a numerical guard (as opposed to bad input).
    pub fn is_numerical_guard(&self) -> bool {
        matches!(
            self,
            Error::IndistinguishableStates { .. }
                | Error::DegenerateNoise { .. }
                | Error::EnumerationLimit { .. }
                | Error::UnsupportedRegime(_)
        )
    }

    /// Process exit code: 3 for tripped numerical guards, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        if self.is_numerical_guard() {
            3
        } else {
            2
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }
}
