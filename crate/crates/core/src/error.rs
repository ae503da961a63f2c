use thiserror::Error;

/// Errors shared by every numerical module.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected {expected} entries for a {dim}x{dim} matrix, got {got}")]
    BadShape {
        dim: usize,
        expected: usize,
        got: usize,
    },

    #[error("matrix dimension must be at least 1")]
    ZeroDimension,

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("matrix is not PSD: eigenvalue {eigenvalue:.6e} below -{tolerance:.6e}")]
    NotPsd { eigenvalue: f64, tolerance: f64 },

    #[error("matrix is not positive definite: smallest eigenvalue {eigenvalue:.6e}")]
    NotPd { eigenvalue: f64 },

    #[error("base point is not positive definite: smallest eigenvalue {eigenvalue:.6e}")]
    BaseNotPd { eigenvalue: f64 },

    #[error(
        "eigensolver did not converge after {sweeps} sweeps (n = {dim}, frobenius norm = {norm:.6e})"
    )]
    EigenNoConvergence { sweeps: usize, dim: usize, norm: f64 },

    #[error("SVD did not converge after {sweeps} sweeps (n = {dim})")]
    SvdNoConvergence { sweeps: usize, dim: usize },

    #[error(
        "tangent vector outside exp domain: eigenvalue {eigenvalue:.6e} of I + W∘X below tolerance"
    )]
    OutsideExpDomain { eigenvalue: f64 },

    #[error("matrix is not orthogonal: ‖QᵀQ − I‖_F = {deviation:.6e}")]
    NotOrthogonal { deviation: f64 },

    #[error("empty matrix list")]
    EmptyInput,

    #[error("invalid spectrum spec: {0}")]
    InvalidSpec(String),

    #[error("invalid solver config: {0}")]
    InvalidConfig(String),

    #[error("malformed record data: {0}")]
    MalformedRecord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
