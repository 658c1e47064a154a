//! Cyclic trace classes and reduction modulo `δ`-exact terms.

use std::collections::BTreeMap;
use std::fmt;

use super::error::FormError;
use super::matrix::NcMatrix;
use super::poly::NCPoly;
use super::trig::TrigPoly;
use super::word::{Letter, Word};

/// `Σ c_w [w]` where `[w]` is the class of `w` under cyclic rotation.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TraceClass {
    terms: BTreeMap<Word, TrigPoly>,
    reduced_mod_delta: bool,
}

impl TraceClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn of_poly(p: &NCPoly) -> Self {
        let mut out = Self::zero();
        for (w, c) in p.terms() {
            out.add_term(w.cyclic_normal_form(), c);
        }
        out
    }

    pub fn of_word(w: Word) -> Self {
        Self::of_poly(&NCPoly::word(w))
    }

    fn add_term(&mut self, w: Word, c: &TrigPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_reduced_mod_delta(&self) -> bool {
        self.reduced_mod_delta
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &TrigPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> TrigPoly {
        self.terms.get(&w.cyclic_normal_form()).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out.reduced_mod_delta = self.reduced_mod_delta && other.reduced_mod_delta;
        out
    }

    /// The same class with every term except `[w]` removed.
    pub fn without(&self, w: &Word) -> Self {
        let key = w.cyclic_normal_form();
        let mut out = self.clone();
        out.terms.remove(&key);
        out
    }
}

/// The canonical word `u*·δu`.
pub fn u_star_du() -> Word {
    Word::reduce([Letter::UStar, Letter::DU])
}

/// Matrix trace followed by cyclic normalization of every word.
pub fn trace_cyclic_normal_form(m: &NcMatrix) -> TraceClass {
    TraceClass::of_poly(&m.trace())
}

/// Deletes the `δ`-exact classes `[u^k·δu]`, `k ≠ −1`.
///
/// A cyclic word with a single `δu` and no free symbols is `[u^k·δu]`, and
/// `δ(u^{k+1}) ≡ (k+1)·u^k·δu` modulo rotations, so it is `τ`-null unless
/// `k = −1`.
pub fn reduce_mod_delta_exact(t: &TraceClass) -> Result<TraceClass, FormError> {
    let mut out = TraceClass { terms: BTreeMap::new(), reduced_mod_delta: true };
    for (w, c) in &t.terms {
        let mut du = 0;
        for l in w.letters() {
            match l {
                Letter::U | Letter::UStar => {}
                Letter::Du(1) => du += 1,
                _ => return Err(FormError::UnsupportedShape(w.to_string())),
            }
        }
        if du != 1 {
            return Err(FormError::UnsupportedShape(w.to_string()));
        }
        if w.u_power() == -1 {
            out.add_term(w.clone(), c);
        }
    }
    Ok(out)
}

impl fmt::Display for TraceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("[{c}][{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TraceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_of_unitary_relation() {
        let m = NcMatrix::diag(vec![&NCPoly::u() * &NCPoly::u_star(), NCPoly::zero()]);
        assert_eq!(trace_cyclic_normal_form(&m), TraceClass::of_poly(&NCPoly::one()));
    }

    #[test]
    fn rotation_invariance() {
        let a = TraceClass::of_poly(&(&NCPoly::du() * &NCPoly::u_star()));
        let b = TraceClass::of_poly(&(&NCPoly::u_star() * &NCPoly::du()));
        assert_eq!(a, b);
    }

    #[test]
    fn delta_exact_terms_vanish() {
        let r = reduce_mod_delta_exact(&TraceClass::of_poly(&NCPoly::du())).unwrap();
        assert!(r.is_zero() && r.is_reduced_mod_delta());
        let r = reduce_mod_delta_exact(&TraceClass::of_poly(&(&NCPoly::u() * &NCPoly::du()))).unwrap();
        assert!(r.is_zero());
        let keep = TraceClass::of_word(u_star_du());
        assert_eq!(reduce_mod_delta_exact(&keep).unwrap().coeff(&u_star_du()), TrigPoly::one());
    }

    #[test]
    fn unsupported_shapes() {
        for p in [NCPoly::u(), &NCPoly::du() * &NCPoly::du(), &NCPoly::du() * &NCPoly::free(0)] {
            assert!(matches!(
                reduce_mod_delta_exact(&TraceClass::of_poly(&p)),
                Err(FormError::UnsupportedShape(_))
            ));
        }
    }
}
