use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter set violates a positivity or normality constraint.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("singular system: the exact orthogonality system is degenerate (non-normal index)")]
    SingularSystem,

    #[error("pole in coefficient formula: {0}")]
    Pole(String),

    /// The running error bound straddles zero at the requested precision.
    #[error("indeterminate sign at {bits} bits")]
    IndeterminateSign { bits: u32 },

    #[error("isolation failed: found {found} zeros, expected {expected}")]
    IsolationFailed { found: usize, expected: usize },

    #[error("continuation failed: {0}")]
    ContinuationFailed(String),

    #[error("undecidable at precision: {0}")]
    Undecidable(String),

    #[error("evaluation at a zero of the polynomial")]
    EvaluationAtZero,
}

impl Error {
    /// True for failures of the numerical machinery, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularSystem
                | Error::IndeterminateSign { .. }
                | Error::IsolationFailed { .. }
                | Error::ContinuationFailed(_)
                | Error::Undecidable(_)
                | Error::EvaluationAtZero
        )
    }
}
