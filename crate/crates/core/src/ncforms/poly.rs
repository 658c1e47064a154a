//! Noncommutative polynomials in `u, u*, δⁿu` and free symbols, with
//! θ-dependent trigonometric coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gauss::GaussRational;
use super::trig::TrigPoly;
use super::word::{Letter, Word};

/// Canonical sum `Σ c_w · w` over reduced words, zero coefficients pruned.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, TrigPoly>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(TrigPoly::one())
    }

    pub fn scalar(c: TrigPoly) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::scalar(TrigPoly::rational(n, 1))
    }

    pub fn term(w: Word, c: TrigPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, TrigPoly::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::letter(l))
    }

    pub fn u() -> Self {
        Self::letter(Letter::U)
    }

    pub fn u_star() -> Self {
        Self::letter(Letter::UStar)
    }

    pub fn du() -> Self {
        Self::letter(Letter::DU)
    }

    pub fn free(id: u32) -> Self {
        Self::letter(Letter::Free(id))
    }

    pub(crate) fn add_term(&mut self, w: Word, c: &TrigPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot = &*slot + c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &TrigPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> TrigPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &TrigPoly) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    pub fn scale_rational(&self, c: &GaussRational) -> Self {
        self.scale(&TrigPoly::constant(c.clone()))
    }

    /// Maps every coefficient through `f`, keeping the words.
    pub fn map_coeffs(&self, f: impl Fn(&TrigPoly) -> TrigPoly) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &f(v));
        }
        out
    }

    /// Antimultiplicative involution. Coefficients are conjugated, the word
    /// is reversed and each letter is starred; `(δⁿu)* = δⁿ(u*)` is expanded
    /// so that no starred derivative letter ever appears.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::scalar(c.conj());
            for l in w.letters().iter().rev() {
                acc = &acc * &star_letter(*l);
            }
            out = &out + &acc;
        }
        out
    }

    /// The Lie-direction derivation `δ`, extended by Leibniz.
    /// Coefficients are annihilated (they depend on θ only).
    pub fn apply_delta(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let letters = w.letters();
            for i in 0..letters.len() {
                let left = Self::word(Word::reduce(letters[..i].iter().copied()));
                let right = Self::word(Word::reduce(letters[i + 1..].iter().copied()));
                let mid = delta_letter(letters[i]);
                out = &out + &(&(&left * &mid) * &right).scale(c);
            }
        }
        out
    }

    /// Differentiates the coefficients in θ; letters are θ-independent.
    pub fn apply_dtheta(&self) -> Self {
        self.map_coeffs(TrigPoly::dtheta)
    }

    /// Substitutes `θ = 2π·m` exactly, leaving constant coefficients.
    pub fn eval_turns(&self, m: i64) -> Self {
        self.map_coeffs(|c| TrigPoly::constant(c.eval_turns(m)))
    }
}

fn delta_letter(l: Letter) -> NCPoly {
    match l {
        Letter::U => NCPoly::du(),
        Letter::UStar => -&(&(&NCPoly::u_star() * &NCPoly::du()) * &NCPoly::u_star()),
        Letter::Du(n) => NCPoly::letter(Letter::Du(n + 1)),
        Letter::Free(id) => NCPoly::letter(Letter::DFree(id, 1)),
        Letter::DFree(id, n) => NCPoly::letter(Letter::DFree(id, n + 1)),
    }
}

fn star_letter(l: Letter) -> NCPoly {
    match l {
        Letter::U => NCPoly::u_star(),
        Letter::UStar => NCPoly::u(),
        Letter::Du(n) => {
            let mut acc = NCPoly::u_star();
            for _ in 0..n {
                acc = acc.apply_delta();
            }
            acc
        }
        Letter::Free(_) | Letter::DFree(..) => NCPoly::letter(l),
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.map_coeffs(|c| -c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("[{c}]{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn unitary_products() {
        assert_eq!(&NCPoly::u() * &NCPoly::u_star(), NCPoly::one());
        let udu = &NCPoly::u() * &NCPoly::du();
        assert_eq!(&NCPoly::u_star() * &udu, NCPoly::du());
    }

    #[test]
    fn scaled_square() {
        let s = TrigPoly::sin_quarter(2);
        let a = NCPoly::u().scale(&s);
        let sq = &a * &a;
        let expected = NCPoly::word(Word::u_pow(2)).scale(&TrigPoly::from_terms([
            (0, GaussRational::real(1, 2)),
            (4, GaussRational::real(-1, 4)),
            (-4, GaussRational::real(-1, 4)),
        ]));
        assert_eq!(sq, expected);
    }

    #[test]
    fn star_of_generators() {
        assert_eq!(NCPoly::u().star(), NCPoly::u_star());
        let expected = -&(&(&NCPoly::u_star() * &NCPoly::du()) * &NCPoly::u_star());
        assert_eq!(NCPoly::du().star(), expected);
        assert_eq!(NCPoly::du().star().star(), NCPoly::du());
    }

    #[test]
    fn delta_examples() {
        assert!(NCPoly::one().apply_delta().is_zero());
        assert!((&NCPoly::u() * &NCPoly::u_star()).apply_delta().is_zero());
        let u2 = NCPoly::word(Word::u_pow(2));
        let expected = &(&NCPoly::du() * &NCPoly::u()) + &(&NCPoly::u() * &NCPoly::du());
        assert_eq!(u2.apply_delta(), expected);
        // δ(u*) has no starred derivative letter
        let d = NCPoly::u_star().apply_delta();
        assert!(d.terms().all(|(w, _)| w.letters().contains(&Letter::DU)));
    }

    #[test]
    fn dtheta_examples() {
        assert!(NCPoly::u().apply_dtheta().is_zero());
        let e = NCPoly::scalar(TrigPoly::monomial(4, GaussRational::one()));
        assert_eq!(e.apply_dtheta(), NCPoly::scalar(TrigPoly::monomial(4, GaussRational::i())));
    }
}
