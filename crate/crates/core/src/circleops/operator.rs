//! Operator expressions on the Fourier lattice `ℓ²(ℤ)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::error::CircleError;
use super::function::CircleFunction;
use super::symbol::{PrincipalSymbol, SequenceSymbol};

/// Sums of products of convolutions and diagonal multipliers.
///
/// `Conv(a)` is multiplication by `a` read on Fourier coefficients, so its
/// matrix entries are `(j, k) ↦ â_{j−k}`; `Diag(b)` is `b(D)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeOperator {
    Conv(CircleFunction),
    Diag(SequenceSymbol),
    Sum(Vec<LatticeOperator>),
    Product(Vec<LatticeOperator>),
}

/// A `(2N+1)²` window on the modes `−N..=N`.
pub type Window = DMatrix<Complex64>;

impl LatticeOperator {
    pub fn identity() -> Self {
        Self::Conv(CircleFunction::one())
    }

    pub fn conv_z() -> Self {
        Self::Conv(CircleFunction::z())
    }

    pub fn heaviside() -> Self {
        Self::Diag(SequenceSymbol::heaviside())
    }

    /// `I − H(D)`.
    pub fn co_heaviside() -> Self {
        let mut s = SequenceSymbol::heaviside();
        s.limit_minus = Complex64::new(1.0, 0.0);
        s.limit_plus = Complex64::new(0.0, 0.0);
        Self::Diag(s)
    }

    pub fn product(factors: Vec<LatticeOperator>) -> Self {
        Self::Product(factors)
    }

    pub fn sum(terms: Vec<LatticeOperator>) -> Self {
        Self::Sum(terms)
    }

    pub fn scaled(self, c: Complex64) -> Self {
        Self::Product(vec![Self::Conv(CircleFunction::constant(c)), self])
    }

    pub fn from_json(s: &str) -> Result<Self, CircleError> {
        serde_json::from_str(s).map_err(|e| CircleError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("operator serializes")
    }

    /// Total bandwidth: the largest `|j − k|` with a nonzero entry.
    pub fn bandwidth(&self) -> usize {
        match self {
            Self::Conv(a) => a.bandwidth(),
            Self::Diag(_) => 0,
            Self::Sum(ts) => ts.iter().map(Self::bandwidth).max().unwrap_or(0),
            Self::Product(fs) => fs.iter().map(Self::bandwidth).sum(),
        }
    }

    pub fn materialize(&self, n: usize) -> Window {
        let dim = 2 * n + 1;
        let idx = |i: usize| i as i64 - n as i64;
        match self {
            Self::Conv(a) => Window::from_fn(dim, dim, |j, k| a.coeff(idx(j) - idx(k))),
            Self::Diag(b) => Window::from_fn(dim, dim, |j, k| {
                if j == k {
                    b.value(idx(j))
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }),
            Self::Sum(ts) => ts.iter().fold(Window::zeros(dim, dim), |acc, t| acc + t.materialize(n)),
            Self::Product(fs) => {
                fs.iter().fold(Window::identity(dim, dim), |acc, f| acc * f.materialize(n))
            }
        }
    }

    /// Computed on the expression: `Conv(a) ↦ (a, a)`, `Diag(b) ↦ (b(−∞), b(+∞))`.
    pub fn principal_symbol(&self) -> PrincipalSymbol {
        match self {
            Self::Conv(a) => PrincipalSymbol::new(a.clone(), a.clone()),
            Self::Diag(b) => PrincipalSymbol::new(
                CircleFunction::constant(b.limit_minus),
                CircleFunction::constant(b.limit_plus),
            ),
            Self::Sum(ts) => ts.iter().fold(PrincipalSymbol::zero(), |acc, t| acc.add(&t.principal_symbol())),
            Self::Product(fs) => {
                fs.iter().fold(PrincipalSymbol::one(), |acc, f| acc.mul(&f.principal_symbol()))
            }
        }
    }

    pub fn adjoint(&self) -> Self {
        match self {
            Self::Conv(a) => Self::Conv(a.conj()),
            Self::Diag(b) => Self::Diag(b.conj()),
            Self::Sum(ts) => Self::Sum(ts.iter().map(Self::adjoint).collect()),
            Self::Product(fs) => Self::Product(fs.iter().rev().map(Self::adjoint).collect()),
        }
    }

    /// Generator of the rotation action `M_a ↦ M_{a∘g_t⁻¹}`:
    /// `δ(Conv(a)) = Conv(−a′)`, `δ(Diag(b)) = 0`, extended by Leibniz.
    pub fn delta(&self) -> Self {
        match self {
            Self::Conv(a) => Self::Conv(a.derivative().scale(Complex64::new(-1.0, 0.0))),
            Self::Diag(_) => Self::Conv(CircleFunction::zero()),
            Self::Sum(ts) => Self::Sum(ts.iter().map(Self::delta).collect()),
            Self::Product(fs) => Self::Sum(
                (0..fs.len())
                    .map(|i| {
                        let mut f = fs.clone();
                        f[i] = fs[i].delta();
                        Self::Product(f)
                    })
                    .collect(),
            ),
        }
    }
}

/// `B = M_z(I − H(D)) + H(D)`.
pub fn op_b() -> LatticeOperator {
    LatticeOperator::sum(vec![
        LatticeOperator::product(vec![LatticeOperator::conv_z(), LatticeOperator::co_heaviside()]),
        LatticeOperator::heaviside(),
    ])
}

/// `M_{z̄}(I − H(D)) + H(D)`.
pub fn op_b_conj() -> LatticeOperator {
    LatticeOperator::sum(vec![
        LatticeOperator::product(vec![
            LatticeOperator::Conv(CircleFunction::z().conj()),
            LatticeOperator::co_heaviside(),
        ]),
        LatticeOperator::heaviside(),
    ])
}

/// `(I − H(D)) + M_z H(D)`, the same construction with the roles of the two
/// half-lattices exchanged.
pub fn op_b_flip() -> LatticeOperator {
    LatticeOperator::sum(vec![
        LatticeOperator::co_heaviside(),
        LatticeOperator::product(vec![LatticeOperator::conv_z(), LatticeOperator::heaviside()]),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(n: usize, k: i64) -> nalgebra::DVector<Complex64> {
        let mut v = nalgebra::DVector::zeros(2 * n + 1);
        v[(k + n as i64) as usize] = Complex64::new(1.0, 0.0);
        v
    }

    #[test]
    fn conv_one_is_identity() {
        let m = LatticeOperator::identity().materialize(5);
        assert_eq!(m, Window::identity(11, 11));
    }

    #[test]
    fn conv_z_shifts_up() {
        let n = 8;
        let m = LatticeOperator::conv_z().materialize(n);
        assert_eq!(&m * basis(n, 3), basis(n, 4));
        assert_eq!(&m * basis(n, -2), basis(n, -1));
    }

    #[test]
    fn b_piecewise_action() {
        let n = 10;
        let b = op_b().materialize(n);
        assert_eq!(&b * basis(n, 5), basis(n, 5));
        assert_eq!(&b * basis(n, -3), basis(n, -2));
        let kernel = basis(n, -1) - basis(n, 0);
        assert!((&b * kernel).norm() < 1e-15);
        // output_k = input_{k−1} (k < 0), input_0 + input_{−1} (k = 0), input_k (k > 0)
        let x = nalgebra::DVector::from_fn(2 * n + 1, |i, _| Complex64::new(i as f64 + 1.0, 0.3 * i as f64));
        let y = &b * &x;
        for k in -(n as i64) + 1..n as i64 {
            let at = |v: &nalgebra::DVector<Complex64>, j: i64| v[(j + n as i64) as usize];
            let expect = match k {
                k if k < 0 => at(&x, k - 1),
                0 => at(&x, 0) + at(&x, -1),
                _ => at(&x, k),
            };
            assert!((at(&y, k) - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn b_symbol() {
        let s = op_b().principal_symbol();
        assert_eq!(s.at_minus, CircleFunction::z());
        assert_eq!(s.at_plus, CircleFunction::one());
        let h = LatticeOperator::heaviside().principal_symbol();
        assert_eq!(h.at_minus, CircleFunction::zero());
        assert_eq!(h.at_plus, CircleFunction::one());
    }

    #[test]
    fn spec_roundtrip() {
        let b = op_b();
        assert_eq!(LatticeOperator::from_json(&b.to_json()).unwrap(), b);
        assert!(LatticeOperator::from_json("{\"nope\":1}").is_err());
    }
}
