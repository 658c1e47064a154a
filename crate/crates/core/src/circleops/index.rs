//! Winding numbers, symbol-based Fredholm index and truncated kernels.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use super::error::CircleError;
use super::function::CircleFunction;
use super::operator::LatticeOperator;

/// Orientation of the index formula, pinned once so that `ind B = +1`.
pub const INDEX_SIGN: i64 = 1;

/// Degree of a sampled closed curve around 0.
pub fn winding_number(curve: &[Complex64]) -> Result<i64, CircleError> {
    if let Some(index) = curve.iter().position(|z| z.norm() == 0.0 || !z.norm().is_finite()) {
        return Err(CircleError::VanishingSample { index });
    }
    let n = curve.len();
    let total: f64 = (0..n).map(|i| (curve[(i + 1) % n] / curve[i]).arg()).sum();
    Ok((total / TAU).round() as i64)
}

/// Sample count that resolves the winding of a function of this bandwidth.
fn sample_count(f: &CircleFunction) -> usize {
    (8 * f.bandwidth() + 8).max(64)
}

/// Winding number of a circle function, with invertibility checked against
/// the sampled minimum modulus.
pub fn function_winding(f: &CircleFunction, circle: &'static str) -> Result<i64, CircleError> {
    let samples = f.sample(sample_count(f));
    let scale = f.coeffs().map(|(_, c)| c.norm()).sum::<f64>().max(1.0);
    let min_abs = samples.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    if min_abs <= 1e-9 * scale {
        return Err(CircleError::NonInvertibleSymbol { circle, min_abs });
    }
    winding_number(&samples)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndexData {
    pub winding_minus: i64,
    pub winding_plus: i64,
    pub index: i64,
}

pub fn index_data(op: &LatticeOperator) -> Result<IndexData, CircleError> {
    let s = op.principal_symbol();
    let winding_minus = function_winding(&s.at_minus, "−∞")?;
    let winding_plus = function_winding(&s.at_plus, "+∞")?;
    Ok(IndexData { winding_minus, winding_plus, index: INDEX_SIGN * (winding_minus - winding_plus) })
}

pub fn fredholm_index(op: &LatticeOperator) -> Result<i64, CircleError> {
    index_data(op).map(|d| d.index)
}

/// Number of singular values below `tol` of the window on modes `−N..=N`,
/// restricted to the interior columns `|k| ≤ N − bandwidth`. Columns near
/// the edge lose part of their image to truncation and would otherwise
/// contribute spurious kernel vectors.
pub fn kernel_dim_truncated(op: &LatticeOperator, n: usize, tol: f64) -> usize {
    let bw = op.bandwidth();
    assert!(n > bw, "window N must exceed the operator bandwidth");
    let full = op.materialize(n);
    let cols = 2 * (n - bw) + 1;
    let interior = full.columns(bw, cols).into_owned();
    let sv = interior.singular_values();
    sv.iter().filter(|s| **s < tol).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circleops::operator::{op_b, op_b_conj};

    #[test]
    fn basic_windings() {
        assert_eq!(winding_number(&CircleFunction::z().sample(64)).unwrap(), 1);
        assert_eq!(winding_number(&CircleFunction::one().sample(64)).unwrap(), 0);
        assert!(winding_number(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).is_err());
    }

    #[test]
    fn index_of_b_family() {
        assert_eq!(fredholm_index(&op_b()).unwrap(), 1);
        assert_eq!(fredholm_index(&op_b_conj()).unwrap(), -1);
        assert_eq!(fredholm_index(&LatticeOperator::identity()).unwrap(), 0);
        assert_eq!(fredholm_index(&LatticeOperator::conv_z()).unwrap(), 0);
    }

    #[test]
    fn non_invertible_symbol_is_rejected() {
        let e = fredholm_index(&LatticeOperator::heaviside());
        assert!(matches!(e, Err(CircleError::NonInvertibleSymbol { .. })));
    }

    #[test]
    fn kernel_of_b() {
        assert_eq!(kernel_dim_truncated(&op_b(), 32, 1e-8), 1);
        assert_eq!(kernel_dim_truncated(&op_b().adjoint(), 32, 1e-8), 0);
        assert_eq!(kernel_dim_truncated(&LatticeOperator::identity(), 32, 1e-8), 0);
    }
}
