//! Graded forms over the exterior basis `{ε_X, ε_θ}`.

use std::collections::BTreeMap;
use std::fmt;

use super::error::FormError;
use super::matrix::NcMatrix;
use super::poly::NCPoly;

/// A subset of `{ε_X, ε_θ}`, ordered `X < θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    One,
    X,
    Theta,
    XTheta,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::One, Basis::X, Basis::Theta, Basis::XTheta];

    pub fn degree(self) -> usize {
        match self {
            Basis::One => 0,
            Basis::X | Basis::Theta => 1,
            Basis::XTheta => 2,
        }
    }

    /// `ε_S ∧ ε_T` as a sign and a basis element, or `None` when it vanishes.
    pub fn wedge(self, other: Basis) -> Option<(i64, Basis)> {
        use Basis::*;
        match (self, other) {
            (One, b) | (b, One) => Some((1, b)),
            (X, Theta) => Some((1, XTheta)),
            (Theta, X) => Some((-1, XTheta)),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Basis::One => "1",
            Basis::X => "eX",
            Basis::Theta => "eT",
            Basis::XTheta => "eX^eT",
        }
    }
}

/// `Σ_S M_S ε_S` with `M_S` square matrices of one shared dimension.
#[derive(Clone, PartialEq, Eq)]
pub struct NCForm {
    dim: usize,
    components: BTreeMap<Basis, NcMatrix>,
}

impl NCForm {
    pub fn zero(dim: usize) -> Self {
        Self { dim, components: BTreeMap::new() }
    }

    pub fn from_matrix(m: NcMatrix) -> Self {
        Self::homogeneous(Basis::One, m)
    }

    pub fn homogeneous(b: Basis, m: NcMatrix) -> Self {
        let mut out = Self::zero(m.dim());
        out.insert(b, m);
        out
    }

    /// The 1×1 form `a` (a scalar-valued 0-form).
    pub fn scalar(a: NCPoly) -> Self {
        Self::from_matrix(NcMatrix::from_rows(vec![vec![a]]))
    }

    pub fn one(dim: usize) -> Self {
        Self::from_matrix(NcMatrix::identity(dim))
    }

    fn insert(&mut self, b: Basis, m: NcMatrix) {
        assert_eq!(m.dim(), self.dim, "component dimension mismatch");
        if m.is_zero() {
            self.components.remove(&b);
        } else {
            self.components.insert(b, m);
        }
    }

    fn accumulate(&mut self, b: Basis, m: &NcMatrix) {
        let next = match self.components.get(&b) {
            Some(cur) => cur + m,
            None => m.clone(),
        };
        self.insert(b, next);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn component(&self, b: Basis) -> NcMatrix {
        self.components.get(&b).cloned().unwrap_or_else(|| NcMatrix::zero(self.dim))
    }

    /// Evaluation on the mixed pair `(ε_X, ε_θ)`.
    pub fn on_mixed_pair(&self) -> NcMatrix {
        self.component(Basis::XTheta)
    }

    /// Largest degree carrying a nonzero component (0 for the zero form).
    pub fn degree(&self) -> usize {
        self.components.keys().map(|b| b.degree()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (Basis, &NcMatrix)> {
        self.components.iter().map(|(b, m)| (*b, m))
    }

    pub fn map(&self, f: impl Fn(&NcMatrix) -> NcMatrix) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, m) in &self.components {
            out.insert(*b, f(m));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, FormError> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for (b, m) in &other.components {
            out.accumulate(*b, m);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FormError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|m| -m)
    }

    pub fn left_mul(&self, a: &NcMatrix) -> Self {
        self.map(|m| a * m)
    }

    pub fn right_mul(&self, a: &NcMatrix) -> Self {
        self.map(|m| m * a)
    }

    fn same_dim(&self, other: &Self) -> Result<(), FormError> {
        if self.dim != other.dim {
            return Err(FormError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// Graded product with matrix multiplication of the entries.
    pub fn wedge(&self, other: &Self) -> Result<Self, FormError> {
        self.same_dim(other)?;
        let (dl, dr) = (self.degree(), other.degree());
        if dl + dr > 2 {
            return Err(FormError::DegreeOverflow { left: dl, right: dr });
        }
        let mut out = Self::zero(self.dim);
        for (bs, ms) in &self.components {
            for (bt, mt) in &other.components {
                if let Some((sign, b)) = bs.wedge(*bt) {
                    let prod = ms * mt;
                    let prod = if sign < 0 { -&prod } else { prod };
                    out.accumulate(b, &prod);
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative. `ε_X` and `ε_θ` are closed, and the two
    /// directions commute, so no bracket term appears.
    pub fn exterior_d(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, m) in &self.components {
            match b {
                Basis::One => {
                    out.accumulate(Basis::X, &m.apply_delta());
                    out.accumulate(Basis::Theta, &m.apply_dtheta());
                }
                Basis::X => out.accumulate(Basis::XTheta, &-&m.apply_dtheta()),
                Basis::Theta => out.accumulate(Basis::XTheta, &m.apply_delta()),
                Basis::XTheta => {}
            }
        }
        out
    }

    pub fn trace(&self) -> BTreeMap<Basis, NCPoly> {
        self.components.iter().map(|(b, m)| (*b, m.trace())).collect()
    }

    pub fn eval_turns(&self, k: i64) -> Self {
        self.map(|m| m.eval_turns(k))
    }
}

impl fmt::Display for NCForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.components.iter().map(|(b, m)| format!("{}: [{m}]", b.label())).collect();
        write!(f, "{}", parts.join(" | "))
    }
}

impl fmt::Debug for NCForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
