use thiserror::Error;

/// Errors raised by the geometric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("degenerate vector")]
    DegenerateVector,
    #[error("not a boundary vector")]
    NotBoundary,
    #[error("metric undefined at infinity")]
    MetricAtInfinity,
    #[error("metric form requires finite points")]
    MetricFormRequiresFinite,
    #[error("degenerate quadruple")]
    DegenerateQuadruple,
    #[error("not an interior point")]
    NotInterior,
    #[error("dilation factor must be positive, got {0}")]
    NonPositiveDilation(f64),
    #[error("chain radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("invalid sample spec: {0}")]
    InvalidSpec(String),
    #[error("gap constraint {min_gap} unsatisfiable after {attempts} attempts")]
    GapUnsatisfiable { min_gap: f64, attempts: usize },
}

pub type Result<T> = std::result::Result<T, GeometryError>;
