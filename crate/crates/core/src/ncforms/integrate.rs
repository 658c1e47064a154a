//! Exact integration of quarter-angle trigonometric polynomials over a period.

use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use super::gauss::GaussRational;
use super::trig::TrigPoly;

/// `twoPiCoeff·2π + remainder`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegralValue {
    pub two_pi_coeff: GaussRational,
    pub remainder: GaussRational,
}

impl IntegralValue {
    pub fn to_complex(&self) -> Complex64 {
        self.two_pi_coeff.to_complex() * std::f64::consts::TAU + self.remainder.to_complex()
    }

    pub fn summary(&self) -> IntegralSummary {
        let v = self.to_complex();
        IntegralSummary {
            two_pi_coeff: self.two_pi_coeff.to_string(),
            remainder: self.remainder.to_string(),
            value: [v.re, v.im],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegralSummary {
    pub two_pi_coeff: String,
    pub remainder: String,
    pub value: [f64; 2],
}

impl fmt::Display for IntegralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·2π + {}", self.two_pi_coeff, self.remainder)
    }
}

/// `∫₀^{2π} f(θ) dθ`. A term `c q^k`, `k ≠ 0`, has antiderivative
/// `c·(4/(ik))·q^k`, and `q` runs from 1 to `i`.
pub fn integrate_theta(f: &TrigPoly) -> IntegralValue {
    let mut rem = GaussRational::zero();
    for (k, c) in f.terms() {
        if k == 0 {
            continue;
        }
        let factor = GaussRational::imag(-4, k as i64);
        let boundary = &GaussRational::i_pow(k as i64) - &GaussRational::from_int(1);
        rem += &(&(c * &factor) * &boundary);
    }
    IntegralValue { two_pi_coeff: f.coeff(0), remainder: rem }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_and_sin_squared() {
        let one = integrate_theta(&TrigPoly::one());
        assert_eq!(one.two_pi_coeff, GaussRational::from_int(1));
        assert!(one.remainder.is_zero());
        let s = TrigPoly::sin_quarter(2);
        let v = integrate_theta(&(&s * &s));
        assert_eq!(v.two_pi_coeff, GaussRational::real(1, 2));
        assert!(v.remainder.is_zero());
    }

    #[test]
    fn quarter_monomial() {
        let v = integrate_theta(&TrigPoly::monomial(1, GaussRational::from_int(1)));
        assert!(v.two_pi_coeff.is_zero());
        // (4/i)(i − 1) = 4 + 4i
        assert_eq!(v.remainder, GaussRational::from_fracs(4, 1, 4, 1));
    }
}
