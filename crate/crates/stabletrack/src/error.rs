use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Sample carries no usable information (e.g. all residuals zero).
    #[error("degenerate sample: {0}")]
    Degenerate(String),

    /// Quadrature failed to reach the requested tolerance. Carries the best
    /// estimate and its error bound so callers can decide whether to accept.
    #[error("quadrature did not converge: estimate {estimate:e}, error bound {bound:e} after {subdivisions} subdivisions")]
    Accuracy {
        estimate: f64,
        bound: f64,
        subdivisions: usize,
    },

    /// Table construction failed (non-monotone values, too few entries, ...).
    #[error("invalid table: {0}")]
    Table(String),

    /// Non-finite value in an input stream; `index` is the position in the
    /// original series.
    #[error("non-finite input at index {index}")]
    NonFinite { index: usize },

    /// Two inputs that must be aligned have different lengths.
    #[error("length mismatch: {0}")]
    Mismatch(String),

    #[error("input too short: need at least {need}, got {got}")]
    TooShort { need: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
