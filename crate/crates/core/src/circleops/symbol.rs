//! Eventually constant sequences and principal symbols.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::function::CircleFunction;

/// `b: ℤ → ℂ`, equal to `limitPlus` for `j > cutoff` and `limitMinus` for
/// `j < −cutoff`. Inside the window, indices missing from `exceptional`
/// take the limit of their own side (`j ≥ 0` counts as the plus side).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "SymbolRepr", into = "SymbolRepr")]
pub struct SequenceSymbol {
    pub exceptional: BTreeMap<i64, Complex64>,
    pub limit_minus: Complex64,
    pub limit_plus: Complex64,
    pub cutoff: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct SymbolRepr {
    #[serde(default)]
    exceptional: BTreeMap<i64, [f64; 2]>,
    limit_minus: [f64; 2],
    limit_plus: [f64; 2],
    #[serde(default)]
    cutoff: i64,
}

fn c([re, im]: [f64; 2]) -> Complex64 {
    Complex64::new(re, im)
}

impl From<SymbolRepr> for SequenceSymbol {
    fn from(r: SymbolRepr) -> Self {
        Self {
            exceptional: r.exceptional.into_iter().map(|(k, v)| (k, c(v))).collect(),
            limit_minus: c(r.limit_minus),
            limit_plus: c(r.limit_plus),
            cutoff: r.cutoff.max(0),
        }
    }
}

impl From<SequenceSymbol> for SymbolRepr {
    fn from(s: SequenceSymbol) -> Self {
        Self {
            exceptional: s.exceptional.into_iter().map(|(k, v)| (k, [v.re, v.im])).collect(),
            limit_minus: [s.limit_minus.re, s.limit_minus.im],
            limit_plus: [s.limit_plus.re, s.limit_plus.im],
            cutoff: s.cutoff,
        }
    }
}

impl SequenceSymbol {
    pub fn constant(v: Complex64) -> Self {
        Self { exceptional: BTreeMap::new(), limit_minus: v, limit_plus: v, cutoff: 0 }
    }

    /// `H(j) = 1` for `j ≥ 0`, else 0.
    pub fn heaviside() -> Self {
        Self {
            exceptional: BTreeMap::new(),
            limit_minus: Complex64::new(0.0, 0.0),
            limit_plus: Complex64::new(1.0, 0.0),
            cutoff: 0,
        }
    }

    pub fn value(&self, j: i64) -> Complex64 {
        if j > self.cutoff {
            return self.limit_plus;
        }
        if j < -self.cutoff {
            return self.limit_minus;
        }
        match self.exceptional.get(&j) {
            Some(v) => *v,
            None if j >= 0 => self.limit_plus,
            None => self.limit_minus,
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            exceptional: self.exceptional.iter().map(|(k, v)| (*k, v.conj())).collect(),
            limit_minus: self.limit_minus.conj(),
            limit_plus: self.limit_plus.conj(),
            cutoff: self.cutoff,
        }
    }
}

/// Values of the principal symbol on the circles at `−∞` and `+∞`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrincipalSymbol {
    pub at_minus: CircleFunction,
    pub at_plus: CircleFunction,
}

impl PrincipalSymbol {
    pub fn new(at_minus: CircleFunction, at_plus: CircleFunction) -> Self {
        Self { at_minus, at_plus }
    }

    pub fn one() -> Self {
        Self::new(CircleFunction::one(), CircleFunction::one())
    }

    pub fn zero() -> Self {
        Self::new(CircleFunction::zero(), CircleFunction::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.at_minus.add(&o.at_minus), self.at_plus.add(&o.at_plus))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.at_minus.mul(&o.at_minus), self.at_plus.mul(&o.at_plus))
    }
}
