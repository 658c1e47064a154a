use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("wedge of degree {left} and degree {right} exceeds the top degree 2")]
    DegreeOverflow { left: usize, right: usize },
    #[error("form dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unsupported word shape for delta-exact reduction: {0}")]
    UnsupportedShape(String),
    #[error("reduction left a nonzero residual: {0}")]
    ReductionFailure(String),
}
