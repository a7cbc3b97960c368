use thiserror::Error;

/// Every failure the library reports. Exact checks fail with a named
/// condition; float checks carry the offending residual.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("imaginary part is not positive definite")]
    NotPositiveDefinite,
    #[error("symplectic form is singular")]
    SingularOmega,
    #[error("B-field is not alternating")]
    NotAlternating,
    #[error("period matrix is singular")]
    SingularT,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("bundle is not holomorphic: AT' is not symmetric")]
    NotHolomorphic,
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("assertion failed for {pair}: {detail}")]
    AssertionFailed { pair: String, detail: String },
    #[error("tolerance exceeded: residual {residual:e} > {tol:e} at {at}")]
    ToleranceExceeded { residual: f64, tol: f64, at: String },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("enumeration bound {0} exceeds the guard of 2")]
    BoundTooLarge(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
