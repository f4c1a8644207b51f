use thiserror::Error;

/// Errors produced by the exact engines and the numeric oracle.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("coefficient sequence is empty")]
    EmptyCoefficients,

    #[error("the zero polynomial is not a valid input")]
    ZeroPolynomial,

    #[error("constant polynomial has no roots")]
    ConstantPolynomial,

    #[error("could not parse coefficient list {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("operation requires degree >= {needed}, got {got}")]
    DegreeTooSmall { needed: usize, got: usize },

    #[error("determinant index k = {k} out of range 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },

    #[error("matrix entries do not form a {dim}x{dim} square")]
    NotSquare { dim: usize, entries: usize },

    #[error("radius must be positive")]
    NonPositiveRadius,

    #[error("tolerance must be positive")]
    NonPositiveTolerance,

    #[error("polynomial is not expansive ({witness})")]
    NotExpansive { witness: String },

    #[error("term count supported for degrees 1..={max}, got {n}")]
    TermCountRange { n: usize, max: usize },

    #[error("constant term must be positive, got {got}")]
    NonPositiveConstantTerm { got: String },

    #[error("enumeration box holds {estimate} candidates, above the cap of {cap}")]
    BoxTooLarge { estimate: String, cap: u64 },

    #[error("coefficient too large for the floating-point oracle")]
    OracleOverflow,

    #[error("root finder did not converge after {sweeps} sweeps (residual {residual:.3e})")]
    OracleFailure { sweeps: u32, residual: f64 },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by the caller's input rather than by a bug or
    /// a numeric failure. CLI maps these to exit code 1, the rest to 2.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::OracleFailure { .. } | Error::OracleOverflow | Error::Internal(_)
        )
    }
}
