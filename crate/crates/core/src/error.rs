use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix contains NaN or infinite entries")]
    NonFinite,
    #[error("matrix is not Hermitian (asymmetry {asymmetry:.3e} exceeds tolerance)")]
    NotHermitian { asymmetry: f64 },
    #[error("matrix is not normal (commutator norm {commutator:.3e})")]
    NotNormal { commutator: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("half-plane family does not enclose a bounded region")]
    Unbounded,
    #[error("operation requires a non-empty region")]
    EmptyRegion,
    #[error("{subsets} subsets exceed the enumeration limit of {limit}")]
    CombinatorialLimit { subsets: u128, limit: u128 },
    #[error("k = {k} violates the required threshold for n = {n}")]
    ThresholdViolated { n: usize, k: usize },
    #[error("subspace intersection has dimension {found}, expected at least {expected}")]
    EmptyIntersection { found: usize, expected: usize },
    #[error("iteration did not converge (residual {residual:.3e})")]
    NoConvergence { residual: f64 },
    #[error("singular linear system")]
    Singular,
    #[error("isometry synthesis failed (best residual {best_residual:.3e})")]
    SynthesisFailed { best_residual: f64 },
    #[error("perturbation destroyed emptiness; largest tested epsilon preserving it: {largest_preserving:.6e}")]
    EmptinessLost { largest_preserving: f64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
