//! Trigonometric polynomials in quarter-angle harmonics.
//!
//! A [`TrigPoly`] is a finite Laurent sum `Σ c_k q^k` with `q = e^{iθ/4}`
//! and exact Gaussian-rational coefficients. Every coefficient that appears
//! in the suspension homotopy (`cos²(θ/4)`, `sin(θ/2)`, `sin²(θ/2)`, …) lives
//! in this ring, which makes identities such as `p² = p` decidable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gauss::GaussRational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TrigPoly {
    coeffs: BTreeMap<i32, GaussRational>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Self::constant(GaussRational::real(num, den))
    }

    /// `c · q^k = c · e^{ikθ/4}`.
    pub fn monomial(k: i32, c: GaussRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, GaussRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    /// `cos(mθ/4) = (q^m + q^{-m})/2`.
    pub fn cos_quarter(m: i32) -> Self {
        Self::from_terms([(m, GaussRational::real(1, 2)), (-m, GaussRational::real(1, 2))])
    }

    /// `sin(mθ/4) = (q^m − q^{-m})/(2i)`.
    pub fn sin_quarter(m: i32) -> Self {
        Self::from_terms([(m, GaussRational::imag(-1, 2)), (-m, GaussRational::imag(1, 2))])
    }

    fn add_term(&mut self, k: i32, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i32) -> GaussRational {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussRational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn support(&self) -> Vec<i32> {
        self.coeffs.keys().copied().collect()
    }

    /// Largest `|k|` in the support (0 for the zero polynomial).
    pub fn bandwidth(&self) -> i32 {
        self.coeffs.keys().map(|k| k.abs()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, v)| (*k, v * c)))
    }

    /// Pointwise complex conjugate: `c_k q^k ↦ conj(c_k) q^{-k}`.
    pub fn conj(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, v)| (-*k, v.conj())))
    }

    /// Real for every θ iff `c_{-k} = conj(c_k)`.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// `d/dθ`: `q^k ↦ (ik/4) q^k`.
    pub fn dtheta(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .map(|(k, v)| (*k, v * &GaussRational::imag(*k as i64, 4))),
        )
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        self.coeffs
            .iter()
            .map(|(k, c)| c.to_complex() * Complex64::from_polar(1.0, *k as f64 * theta / 4.0))
            .sum()
    }

    /// Exact value at `θ = 2π·m`, where `q = i^m`.
    pub fn eval_turns(&self, m: i64) -> GaussRational {
        let mut acc = GaussRational::zero();
        for (k, c) in &self.coeffs {
            acc += &(c * &GaussRational::i_pow(m * *k as i64));
        }
        acc
    }
}

impl Add for &TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul for &TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = TrigPoly::zero();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                out.add_term(ka + kb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        TrigPoly::from_terms(self.coeffs.iter().map(|(k, c)| (*k, -c)))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TrigPoly {
            type Output = TrigPoly;
            fn $m(self, rhs: TrigPoly) -> TrigPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| if *k == 0 { format!("{c}") } else { format!("{c}q^{k}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
