//! Trigonometric polynomials on the circle with complex coefficients.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// `a(e^{iθ}) = Σ â_k e^{ikθ}` with finitely many nonzero `â_k`.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "FourierRepr", into = "FourierRepr")]
pub struct CircleFunction {
    fourier: BTreeMap<i64, Complex64>,
}

#[derive(Serialize, Deserialize)]
struct FourierRepr {
    fourier: BTreeMap<i64, [f64; 2]>,
}

impl From<FourierRepr> for CircleFunction {
    fn from(r: FourierRepr) -> Self {
        Self::from_coeffs(r.fourier.into_iter().map(|(k, [re, im])| (k, Complex64::new(re, im))))
    }
}

impl From<CircleFunction> for FourierRepr {
    fn from(f: CircleFunction) -> Self {
        FourierRepr { fourier: f.fourier.into_iter().map(|(k, c)| (k, [c.re, c.im])).collect() }
    }
}

impl CircleFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// `c·z^k`.
    pub fn monomial(k: i64, c: Complex64) -> Self {
        Self::from_coeffs([(k, c)])
    }

    /// The coordinate function `z`.
    pub fn z() -> Self {
        Self::monomial(1, Complex64::new(1.0, 0.0))
    }

    pub fn from_coeffs<I: IntoIterator<Item = (i64, Complex64)>>(coeffs: I) -> Self {
        let mut fourier = BTreeMap::new();
        for (k, c) in coeffs {
            *fourier.entry(k).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        fourier.retain(|_, c: &mut Complex64| *c != Complex64::new(0.0, 0.0));
        Self { fourier }
    }

    pub fn coeff(&self, k: i64) -> Complex64 {
        self.fourier.get(&k).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.fourier.iter().map(|(k, c)| (*k, *c))
    }

    /// Zeroth coefficient, the mean over normalized arclength.
    pub fn mean(&self) -> Complex64 {
        self.coeff(0)
    }

    pub fn bandwidth(&self) -> usize {
        self.fourier.keys().map(|k| k.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        self.fourier.iter().map(|(k, c)| c * Complex64::from_polar(1.0, *k as f64 * theta)).sum()
    }

    /// Values at `θ_j = 2πj/n`.
    pub fn sample(&self, n: usize) -> Vec<Complex64> {
        (0..n).map(|j| self.eval(TAU * j as f64 / n as f64)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_coeffs(self.coeffs().chain(other.coeffs()))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_coeffs(self.coeffs().map(|(k, v)| (k, v * c)))
    }

    /// Pointwise product (convolution of coefficients).
    pub fn mul(&self, other: &Self) -> Self {
        Self::from_coeffs(
            self.coeffs().flat_map(|(j, a)| other.coeffs().map(move |(k, b)| (j + k, a * b))),
        )
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_coeffs(self.coeffs().map(|(k, c)| (-k, c.conj())))
    }

    /// `d/dθ`: `â_k ↦ ik·â_k`.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs().map(|(k, c)| (k, c * Complex64::new(0.0, k as f64))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_matches_coefficients() {
        let f = CircleFunction::from_coeffs([
            (-2, Complex64::new(0.5, -1.0)),
            (0, Complex64::new(2.0, 0.0)),
            (3, Complex64::new(0.0, 1.0)),
        ]);
        for (j, v) in f.sample(16).into_iter().enumerate() {
            let t = TAU * j as f64 / 16.0;
            let direct = Complex64::new(0.5, -1.0) * Complex64::from_polar(1.0, -2.0 * t)
                + 2.0
                + Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, 3.0 * t);
            assert!((v - direct).norm() < 1e-12);
        }
    }

    #[test]
    fn json_shape() {
        let f: CircleFunction = serde_json::from_str(r#"{"fourier":{"1":[1.0,0.0]}}"#).unwrap();
        assert_eq!(f, CircleFunction::z());
        let back = serde_json::to_string(&f).unwrap();
        assert_eq!(back, r#"{"fourier":{"1":[1.0,0.0]}}"#);
    }
}
