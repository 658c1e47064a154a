//! Finitely generated abelian groups: presentations, invariant factors and
//! generator labels.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::intmat::{smith, IntMatrix};
use super::lattice::Lattice;

/// `ℤ^r ⊕ ℤ_{d₁} ⊕ … ⊕ ℤ_{d_k}` with `d₁ | … | d_k`, each `d_i ≥ 2`.
///
/// Labels name the generators in that order (free ones first). Equality
/// ignores labels.
#[derive(Clone, Debug)]
pub struct FGAbelian {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
    pub generator_labels: Vec<String>,
}

impl PartialEq for FGAbelian {
    fn eq(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.invariant_factors == other.invariant_factors
    }
}

impl Eq for FGAbelian {}

impl FGAbelian {
    /// Checks the divisibility chain and the label count.
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>, labels: Vec<String>) -> Result<Self, String> {
        if invariant_factors.iter().any(|d| *d < BigInt::from(2)) {
            return Err("invariant factors must be at least 2".into());
        }
        if invariant_factors.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return Err("invariant factors must form a divisibility chain".into());
        }
        if labels.len() != free_rank + invariant_factors.len() {
            return Err(format!(
                "{} labels for {} generators",
                labels.len(),
                free_rank + invariant_factors.len()
            ));
        }
        Ok(Self { free_rank, invariant_factors, generator_labels: labels })
    }

    pub fn zero() -> Self {
        Self { free_rank: 0, invariant_factors: Vec::new(), generator_labels: Vec::new() }
    }

    /// `ℤⁿ` with coordinate labels `(1,0,…)`, `(0,1,…)`, ….
    pub fn free(n: usize) -> Self {
        let labels = (0..n).map(|i| tuple_label(&super::lattice::unit(n, i))).collect();
        Self { free_rank: n, invariant_factors: Vec::new(), generator_labels: labels }
    }

    pub fn free_labeled(labels: Vec<String>) -> Self {
        Self { free_rank: labels.len(), invariant_factors: Vec::new(), generator_labels: labels }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.generator_labels.len(), "label count");
        self.generator_labels = labels;
        self
    }

    pub fn num_generators(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.num_generators() == 0
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Order of a finite group; `None` when the group has a free part.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.invariant_factors.iter().product())
    }

    pub fn torsion_labels(&self) -> &[String] {
        &self.generator_labels[self.free_rank..]
    }

    pub fn free_labels(&self) -> &[String] {
        &self.generator_labels[..self.free_rank]
    }

    /// `ℤ ⊕ ℤ₂`, `ℤ⁴`, `0`: the isomorphism type without labels.
    pub fn short(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ{}", superscript(r))),
        }
        for d in &self.invariant_factors {
            parts.push(format!("ℤ{}", subscript(d)));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }

    /// Every generator with its label: `ℤ[(1,1)] ⊕ ℤ₂[(1,0)]`, or `[1]₀ℤ`
    /// for labels that are already bracketed.
    pub fn labeled(&self) -> String {
        if self.is_trivial() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, l) in self.generator_labels.iter().enumerate() {
            let base = if i < self.free_rank {
                "ℤ".to_string()
            } else {
                format!("ℤ{}", subscript(&self.invariant_factors[i - self.free_rank]))
            };
            parts.push(if l.starts_with('[') { format!("{l}{base}") } else { format!("{base}[{l}]") });
        }
        parts.join(" ⊕ ")
    }

    /// `self ⊕ other`. Labels survive when the merged torsion list already
    /// forms a chain; otherwise the torsion part is re-diagonalized and
    /// its labels become the corresponding combinations.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut free_labels = self.free_labels().to_vec();
        free_labels.extend_from_slice(other.free_labels());
        let mut torsion: Vec<(BigInt, String)> = self
            .invariant_factors
            .iter()
            .cloned()
            .zip(self.torsion_labels().iter().cloned())
            .chain(other.invariant_factors.iter().cloned().zip(other.torsion_labels().iter().cloned()))
            .collect();
        torsion.sort_by(|a, b| a.0.cmp(&b.0));
        let chain_ok = torsion.windows(2).all(|w| (&w[1].0 % &w[0].0).is_zero());
        let (factors, torsion_labels): (Vec<BigInt>, Vec<String>) = if chain_ok {
            torsion.into_iter().unzip()
        } else {
            let n = torsion.len();
            let orders: Vec<BigInt> = torsion.iter().map(|t| t.0.clone()).collect();
            let p = Presented::new(n, Lattice::from_generators(n, (0..n).map(|i| scaled_unit(n, i, &orders[i]))));
            let dec = p.decompose();
            let labels = dec
                .generators
                .iter()
                .map(|g| combination_label(g, &torsion.iter().map(|t| t.1.clone()).collect::<Vec<_>>()))
                .collect();
            (dec.orders, labels)
        };
        let mut labels = free_labels;
        labels.extend(torsion_labels);
        Self { free_rank: self.free_rank + other.free_rank, invariant_factors: factors, generator_labels: labels }
    }
}

impl fmt::Display for FGAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.labeled())
    }
}

impl Serialize for FGAbelian {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let factors: Vec<serde_json::Value> = self
            .invariant_factors
            .iter()
            .map(|d| match d.to_i64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(d.to_string()),
            })
            .collect();
        let mut st = s.serialize_struct("FGAbelian", 4)?;
        st.serialize_field("freeRank", &self.free_rank)?;
        st.serialize_field("invariantFactors", &factors)?;
        st.serialize_field("generatorLabels", &self.generator_labels)?;
        st.serialize_field("display", &self.labeled())?;
        st.end()
    }
}

fn superscript(n: usize) -> String {
    const S: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| S[c.to_digit(10).unwrap() as usize]).collect()
}

fn subscript(d: &BigInt) -> String {
    const S: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    d.to_string().chars().map(|c| S[c.to_digit(10).unwrap() as usize]).collect()
}

fn scaled_unit(n: usize, i: usize, d: &BigInt) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = d.clone();
    v
}

/// `(1,-1,0)`.
pub fn tuple_label(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// `a + 2·b` style name for a combination of labelled generators.
fn combination_label(coeffs: &[BigInt], names: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| if c.is_one() { n.clone() } else { format!("{c}·{n}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Flips `v` so that its first nonzero entry is positive.
fn sign_normalize(v: &mut [BigInt]) -> bool {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => {
            v.iter_mut().for_each(|x| *x = -&*x);
            true
        }
        _ => false,
    }
}

/// `ℤⁿ / R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presented {
    pub gens: usize,
    pub relations: Lattice,
}

/// An explicit splitting of a presented group into cyclic factors.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Orders of the cyclic factors: free ones (order 0) first, then the
    /// torsion orders in divisibility order.
    pub orders: Vec<BigInt>,
    /// A representative in `ℤⁿ` for each factor, reduced modulo `R`.
    pub generators: Vec<Vec<BigInt>>,
    /// Row `i` reads off the `i`-th coordinate (mod its order), applied
    /// to `x` itself or to its coordinates in `through`.
    pub coords: IntMatrix,
    pub through: Option<Lattice>,
}

impl Decomposition {
    pub fn free_rank(&self) -> usize {
        self.orders.iter().take_while(|d| d.is_zero()).count()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.orders[self.free_rank()..].to_vec()
    }

    pub fn group(&self, labels: Vec<String>) -> FGAbelian {
        FGAbelian::new(self.free_rank(), self.torsion(), labels).expect("decomposition is normalized")
    }

    pub fn tuple_labels(&self) -> Vec<String> {
        self.generators.iter().map(|g| tuple_label(g)).collect()
    }

    /// Coordinates of `x`, with torsion coordinates reduced into `[0, d)`.
    pub fn coordinates_of(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = match &self.through {
            Some(l) => l.coordinates(x)?,
            None => x.to_vec(),
        };
        let c = self
            .coords
            .apply(&y)
            .into_iter()
            .zip(&self.orders)
            .map(|(c, d)| if d.is_zero() { c } else { num_integer::Integer::mod_floor(&c, d) })
            .collect();
        Some(c)
    }
}

impl Presented {
    pub fn new(gens: usize, relations: Lattice) -> Self {
        assert_eq!(relations.dim(), gens, "relation ambient mismatch");
        Self { gens, relations }
    }

    pub fn free(n: usize) -> Self {
        Self::new(n, Lattice::zero(n))
    }

    /// `ℤ^r ⊕ ℤ_{d₁} ⊕ …` with the free coordinates first.
    pub fn from_group(g: &FGAbelian) -> Self {
        let n = g.num_generators();
        let rels = g.invariant_factors.iter().enumerate().map(|(i, d)| scaled_unit(n, g.free_rank + i, d));
        Self::new(n, Lattice::from_generators(n, rels))
    }

    pub fn is_free(&self) -> bool {
        self.relations.rank() == 0
    }

    pub fn decompose(&self) -> Decomposition {
        let n = self.gens;
        let rel = self.relations.basis_matrix();
        let s = smith(&rel);
        let mut order_of: Vec<BigInt> = vec![BigInt::zero(); n];
        for (i, d) in s.invariant_factors().into_iter().enumerate() {
            order_of[i] = d;
        }
        let mut idx: Vec<usize> = (s.rank..n).collect();
        idx.extend((0..s.rank).filter(|&i| !order_of[i].is_one()));
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        let mut coord_rows = Vec::new();
        for &i in &idx {
            let mut g = self.relations.reduce(&s.u_inv.column(i));
            let mut row = s.u.row(i);
            if sign_normalize(&mut g) {
                row.iter_mut().for_each(|x| *x = -&*x);
                g = self.relations.reduce(&g);
            }
            orders.push(order_of[i].clone());
            generators.push(g);
            coord_rows.push(row);
        }
        let coords = IntMatrix::from_rows_big(idx.len(), n, coord_rows);
        Decomposition { orders, generators, coords, through: None }
    }

    pub fn group(&self) -> FGAbelian {
        let d = self.decompose();
        let labels = d.tuple_labels();
        d.group(labels)
    }
}

/// `L / R` for lattices `R ⊆ L ⊆ ℤⁿ`, with generators in the ambient `ℤⁿ`.
/// Coordinates are read through the basis of `L`.
pub fn subquotient(l: &Lattice, r: &Lattice) -> Decomposition {
    assert!(l.contains_lattice(r), "relations must lie in the subgroup");
    let m = l.rank();
    let x_cols: Vec<Vec<BigInt>> = r.basis().iter().map(|v| l.coordinates(v).expect("contained")).collect();
    let inner = Presented::new(m, Lattice::from_generators(m, x_cols)).decompose();
    let b = l.basis_matrix();
    let generators = inner
        .generators
        .iter()
        .map(|y| {
            let mut g = r.reduce(&b.apply(y));
            sign_normalize(&mut g);
            r.reduce(&g)
        })
        .collect();
    Decomposition { orders: inner.orders, generators, coords: inner.coords, through: Some(l.clone()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kseq::lattice::big_vec;

    #[test]
    fn quotient_by_index_two_lattice() {
        let r = Lattice::from_generators(2, [big_vec(&[0, -1]), big_vec(&[2, -1])]);
        let g = Presented::new(2, r).group();
        assert_eq!(g.short(), "ℤ₂");
        assert_eq!(g.generator_labels, vec!["(1,0)"]);
        assert_eq!(g.labeled(), "ℤ₂[(1,0)]");
    }

    #[test]
    fn free_part_label() {
        let r = Lattice::from_generators(2, [big_vec(&[-1, 0]), big_vec(&[1, 0])]);
        let g = Presented::new(2, r).group();
        assert_eq!(g.labeled(), "ℤ[(0,1)]");
    }

    #[test]
    fn chain_is_enforced() {
        assert!(FGAbelian::new(0, vec![BigInt::from(2), BigInt::from(3)], vec!["a".into(), "b".into()]).is_err());
        assert!(FGAbelian::new(0, vec![BigInt::from(1)], vec!["a".into()]).is_err());
        let z2 = FGAbelian::new(0, vec![BigInt::from(2)], vec!["a".into()]).unwrap();
        let z3 = FGAbelian::new(0, vec![BigInt::from(3)], vec!["b".into()]).unwrap();
        let s = z2.direct_sum(&z3);
        assert_eq!(s.short(), "ℤ₆");
        assert_eq!(s.order(), Some(BigInt::from(6)));
    }

    #[test]
    fn display_forms() {
        let g = FGAbelian::free_labeled(vec!["[1]₀".into(), "[𝔴]₁".into()]);
        assert_eq!(g.labeled(), "[1]₀ℤ ⊕ [𝔴]₁ℤ");
        assert_eq!(g.short(), "ℤ²");
        assert_eq!(FGAbelian::zero().short(), "0");
        assert_eq!(FGAbelian::free(2), FGAbelian::free_labeled(vec!["x".into(), "y".into()]));
    }

    #[test]
    fn subquotient_of_lattices() {
        // L = 2ℤ ⊕ ℤ, R = 4ℤ ⊕ 0 → L/R ≅ ℤ ⊕ ℤ₂
        let l = Lattice::from_generators(2, [big_vec(&[2, 0]), big_vec(&[0, 1])]);
        let r = Lattice::from_generators(2, [big_vec(&[4, 0])]);
        let d = subquotient(&l, &r);
        assert_eq!(d.group(d.tuple_labels()).short(), "ℤ ⊕ ℤ₂");
        assert_eq!(d.coordinates_of(&big_vec(&[0, 3])).map(|c| c.len()), Some(2));
        assert_eq!(d.coordinates_of(&big_vec(&[1, 0])), None);
    }
}
