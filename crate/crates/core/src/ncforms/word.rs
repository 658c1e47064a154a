//! Letters and reduced words over one unitary generator.
//!
//! Words are kept at the fixed point of the rewriting rules `u·u* → 1` and
//! `u*·u → 1`. Both rules shorten the word, so reduction terminates; the
//! only critical pairs are `u·u*·u` and `u*·u·u*`, which both reduce to a
//! single letter, so the system is confluent.

use std::cmp::Ordering;
use std::fmt;

/// One generator of the word monoid.
///
/// `Du(n)` stands for the n-th derivative `δⁿ(u)`. There is no letter for
/// `δ(u*)`: it is expanded to `−u*·δ(u)·u*` wherever it would arise.
/// `Free(id)` is a self-adjoint free symbol and `DFree(id, n)` its n-th
/// derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    U,
    UStar,
    Du(u32),
    Free(u32),
    DFree(u32, u32),
}

impl Letter {
    pub const DU: Letter = Letter::Du(1);

    fn cancels(self, other: Letter) -> bool {
        matches!((self, other), (Letter::U, Letter::UStar) | (Letter::UStar, Letter::U))
    }

    /// Net power of `u` carried by the letter.
    pub fn u_power(self) -> i64 {
        match self {
            Letter::U => 1,
            Letter::UStar => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::U => write!(f, "u"),
            Letter::UStar => write!(f, "u*"),
            Letter::Du(1) => write!(f, "du"),
            Letter::Du(n) => write!(f, "d{n}u"),
            Letter::Free(id) => write!(f, "g{id}"),
            Letter::DFree(id, 1) => write!(f, "dg{id}"),
            Letter::DFree(id, n) => write!(f, "d{n}g{id}"),
        }
    }
}

/// A reduced word. Ordered length-first, then lexicographically by letter.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    /// Builds the reduced form of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Self(stack)
    }

    /// `u^k` (negative `k` gives powers of `u*`).
    pub fn u_pow(k: i64) -> Self {
        let l = if k >= 0 { Letter::U } else { Letter::UStar };
        Self(vec![l; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn u_power(&self) -> i64 {
        self.0.iter().map(|l| l.u_power()).sum()
    }

    /// True when no `u·u*` or `u*·u` pair is adjacent.
    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Cancels inverse pairs across the wrap-around point, then rotates to
    /// the minimal representative of the conjugacy class.
    pub fn cyclic_normal_form(&self) -> Word {
        let mut v: &[Letter] = &self.0;
        while v.len() >= 2 && v[0].cancels(v[v.len() - 1]) {
            v = &v[1..v.len() - 1];
        }
        let n = v.len();
        (0..n.max(1))
            .map(|r| Word(v[r.min(n)..].iter().chain(v[..r.min(n)].iter()).copied().collect()))
            .min()
            .unwrap_or_default()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("·"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    #[test]
    fn unitary_relations() {
        assert!(Word::reduce([U, UStar]).is_empty());
        assert_eq!(Word::reduce([UStar, U, Letter::DU]), Word::letter(Letter::DU));
    }

    #[test]
    fn critical_pairs_resolve() {
        assert_eq!(Word::reduce([U, UStar, U]), Word::letter(U));
        assert_eq!(Word::reduce([UStar, U, UStar]), Word::letter(UStar));
    }

    #[test]
    fn order_is_length_first() {
        let short = Word::reduce([Free(9)]);
        let long = Word::reduce([U, U]);
        assert!(short < long);
        assert!(Word::empty() < short);
    }

    #[test]
    fn cyclic_form_cancels_across_wrap() {
        let w = Word::reduce([U, Letter::DU, UStar]);
        assert_eq!(w.cyclic_normal_form(), Word::letter(Letter::DU));
        let a = Word::reduce([Letter::DU, UStar]).cyclic_normal_form();
        let b = Word::reduce([UStar, Letter::DU]).cyclic_normal_form();
        assert_eq!(a, b);
        assert_eq!(a.letters(), &[UStar, Letter::DU]);
    }
}
