//! Square matrices with [`NCPoly`] entries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::NCPoly;
use super::trig::TrigPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcMatrix {
    dim: usize,
    entries: Vec<NCPoly>,
}

impl NcMatrix {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: vec![NCPoly::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, NCPoly::one());
        }
        m
    }

    /// Row-major construction; panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<NCPoly>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self { dim, entries: rows.into_iter().flatten().collect() }
    }

    pub fn diag(entries: Vec<NCPoly>) -> Self {
        let mut m = Self::zero(entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NCPoly) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    pub fn map(&self, f: impl Fn(&NCPoly) -> NCPoly) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &TrigPoly) -> Self {
        self.map(|e| e.scale(c))
    }

    /// Conjugate transpose with the polynomial involution on entries.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).star());
            }
        }
        out
    }

    pub fn trace(&self) -> NCPoly {
        (0..self.dim).fold(NCPoly::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn apply_delta(&self) -> Self {
        self.map(NCPoly::apply_delta)
    }

    pub fn apply_dtheta(&self) -> Self {
        self.map(NCPoly::apply_dtheta)
    }

    pub fn eval_turns(&self, m: i64) -> Self {
        self.map(|e| e.eval_turns(m))
    }

    /// Indices and values of the entries that are nonzero.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &NCPoly)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.get(i, j);
                if !e.is_zero() {
                    out.push((i, j, e));
                }
            }
        }
        out
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
    }
}

impl Add for &NcMatrix {
    type Output = NcMatrix;
    fn add(self, rhs: &NcMatrix) -> NcMatrix {
        self.check_dim(rhs);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        NcMatrix { dim: self.dim, entries }
    }
}

impl Sub for &NcMatrix {
    type Output = NcMatrix;
    fn sub(self, rhs: &NcMatrix) -> NcMatrix {
        self.check_dim(rhs);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        NcMatrix { dim: self.dim, entries }
    }
}

impl Mul for &NcMatrix {
    type Output = NcMatrix;
    fn mul(self, rhs: &NcMatrix) -> NcMatrix {
        self.check_dim(rhs);
        let n = self.dim;
        let mut out = NcMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = NCPoly::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

impl Neg for &NcMatrix {
    type Output = NcMatrix;
    fn neg(self) -> NcMatrix {
        self.map(|e| -e)
    }
}

impl fmt::Display for NcMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero_entries();
        if nz.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            nz.into_iter().map(|(i, j, e)| format!("({},{}): {e}", i + 1, j + 1)).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl fmt::Debug for NcMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
