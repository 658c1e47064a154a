//! Sublattices of ℤⁿ in Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::intmat::IntMatrix;

/// A subgroup of ℤⁿ, stored as the rows of its Hermite normal form:
/// echelon rows with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. The form is unique, so equality is lattice equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

fn pivot_col(row: &[BigInt]) -> usize {
    row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero")
}

fn axpy(dst: &mut [BigInt], c: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += c * s;
    }
}

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Self { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Self::from_generators(dim, (0..dim).map(|i| unit(dim, i)))
    }

    pub fn from_generators(dim: usize, gens: impl IntoIterator<Item = Vec<BigInt>>) -> Self {
        let mut rows: Vec<Vec<BigInt>> = gens
            .into_iter()
            .inspect(|g| assert_eq!(g.len(), dim, "generator length"))
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .collect();
        let mut r = 0;
        for col in 0..dim {
            loop {
                let best = (r..rows.len())
                    .filter(|&i| !rows[i][col].is_zero())
                    .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
                let Some(i) = best else { break };
                rows.swap(r, i);
                let mut done = true;
                for k in r + 1..rows.len() {
                    if rows[k][col].is_zero() {
                        continue;
                    }
                    let q = -rows[k][col].div_floor(&rows[r][col]);
                    let pivot = rows[r].clone();
                    axpy(&mut rows[k], &q, &pivot);
                    done &= rows[k][col].is_zero();
                }
                if done {
                    break;
                }
            }
            if r < rows.len() && !rows[r][col].is_zero() {
                if rows[r][col].is_negative() {
                    rows[r].iter_mut().for_each(|x| *x = -&*x);
                }
                let pivot = rows[r].clone();
                for row in rows.iter_mut().take(r) {
                    let q = -row[col].div_floor(&pivot[col]);
                    axpy(row, &q, &pivot);
                }
                r += 1;
            }
        }
        rows.truncate(r);
        Self { dim, basis: rows }
    }

    /// The lattice spanned by the columns of `m`.
    pub fn column_span(m: &IntMatrix) -> Self {
        Self::from_generators(m.rows(), m.columns())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// The basis as the columns of a `dim × rank` matrix.
    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.dim, &self.basis)
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "ambient mismatch");
        Self::from_generators(self.dim, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Canonical representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = v.to_vec();
        for b in &self.basis {
            let pc = pivot_col(b);
            let q = -out[pc].div_floor(&b[pc]);
            axpy(&mut out, &q, b);
        }
        out
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_lattice(&self, other: &Self) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            let pc = pivot_col(b);
            let (q, r) = rest[pc].div_rem(&b[pc]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut rest, &-&q, b);
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }
}

pub fn unit(dim: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); dim];
    v[i] = BigInt::from(1);
    v
}

pub fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
