use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CircleError {
    #[error("symbol vanishes on the {circle} circle (min |σ| = {min_abs:.3e}); index undefined")]
    NonInvertibleSymbol { circle: &'static str, min_abs: f64 },
    #[error("closed curve passes through 0 at sample {index}")]
    VanishingSample { index: usize },
    #[error("invalid operator spec: {0}")]
    Parse(String),
}
