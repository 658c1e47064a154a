//! Strategies and property bodies shared by the property suites and the
//! acceptance run.
#![allow(dead_code)]

use std::collections::BTreeSet;

use chernkit::kseq::lattice::big_vec;
use chernkit::kseq::{cokernel, kernel_basis, smith, IntMatrix, Lattice};
use chernkit::ncforms::{
    trace_cyclic_normal_form, Basis, GaussRational, Letter, NCForm, NCPoly, NcMatrix, TrigPoly, Word,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Outcome = Result<(), TestCaseError>;

pub fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        3 => Just(Letter::U),
        3 => Just(Letter::UStar),
        1 => Just(Letter::DU),
        1 => (0u32..2).prop_map(Letter::Free),
    ]
}

pub fn letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(), 0..=max)
}

pub fn coeff() -> impl Strategy<Value = TrigPoly> {
    prop::collection::vec((-2i32..=2, -3i64..=3, 1i64..=3, -2i64..=2), 1..=2).prop_map(|ts| {
        TrigPoly::from_terms(ts.into_iter().map(|(k, a, d, b)| (k, GaussRational::from_fracs(a, d, b, d))))
    })
}

pub fn poly() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((letters(3), coeff()), 0..=3).prop_map(|ts| {
        ts.into_iter().fold(NCPoly::zero(), |acc, (w, c)| &acc + &NCPoly::term(Word::reduce(w), c))
    })
}

pub fn nc_matrix() -> impl Strategy<Value = NcMatrix> {
    prop::collection::vec(poly(), 4).prop_map(|e| NcMatrix::from_rows(vec![e[..2].to_vec(), e[2..].to_vec()]))
}

pub fn int_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r).prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

pub fn pick_lists() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (prop::collection::vec(any::<usize>(), 8), prop::collection::vec(any::<usize>(), 8))
}

/// Deletes one adjacent `u u*` or `u* u` pair at a time, choosing among the
/// available pairs with `picks`.
pub fn reduce_by_choice(mut w: Vec<Letter>, picks: &[usize]) -> Vec<Letter> {
    let cancels = |a: Letter, b: Letter| matches!((a, b), (Letter::U, Letter::UStar) | (Letter::UStar, Letter::U));
    let mut step = 0;
    loop {
        let spots: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| cancels(w[i], w[i + 1])).collect();
        if spots.is_empty() {
            return w;
        }
        let i = spots[picks.get(step).copied().unwrap_or(0) % spots.len()];
        w.drain(i..i + 2);
        step += 1;
    }
}

pub fn confluence(w: Vec<Letter>, a: &[usize], b: &[usize]) -> Outcome {
    let x = reduce_by_choice(w.clone(), a);
    let y = reduce_by_choice(w.clone(), b);
    prop_assert_eq!(&x, &y);
    let r = Word::reduce(w);
    prop_assert_eq!(r.letters(), &x[..]);
    prop_assert!(r.is_reduced());
    Ok(())
}

pub fn star_involution(a: &NCPoly, b: &NCPoly) -> Outcome {
    prop_assert_eq!(a.star().star(), a.clone());
    prop_assert_eq!((a * b).star(), &b.star() * &a.star());
    prop_assert_eq!((a + b).star(), &a.star() + &b.star());
    Ok(())
}

pub fn leibniz(a: &NCPoly, b: &NCPoly) -> Outcome {
    let ab = a * b;
    prop_assert_eq!(ab.apply_delta(), &(&a.apply_delta() * b) + &(a * &b.apply_delta()));
    prop_assert_eq!(ab.apply_dtheta(), &(&a.apply_dtheta() * b) + &(a * &b.apply_dtheta()));
    Ok(())
}

pub fn d_squared(m0: NcMatrix, mx: NcMatrix, mt: NcMatrix) -> Outcome {
    let f0 = NCForm::from_matrix(m0);
    prop_assert!(f0.exterior_d().exterior_d().is_zero());
    let f1 = NCForm::homogeneous(Basis::X, mx).add(&NCForm::homogeneous(Basis::Theta, mt)).unwrap();
    prop_assert!(f1.exterior_d().exterior_d().is_zero());
    Ok(())
}

pub fn cyclicity(x: &NcMatrix, y: &NcMatrix) -> Outcome {
    prop_assert_eq!(trace_cyclic_normal_form(&(x * y)), trace_cyclic_normal_form(&(y * x)));
    Ok(())
}

fn is_unit(d: &BigInt) -> bool {
    d.abs().is_one()
}

pub fn smith_invariants(m: &IntMatrix) -> Outcome {
    let s = smith(m);
    prop_assert_eq!(&(&s.u * m) * &s.v, s.d.clone());
    prop_assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
    prop_assert!(is_unit(&s.u.det()) && is_unit(&s.v.det()));
    prop_assert!(s.d.is_diagonal());
    prop_assert_eq!(s.rank, m.rank());
    let f = s.invariant_factors();
    prop_assert!(f.iter().all(|d| d.is_positive()));
    prop_assert!(f.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    for i in s.rank..m.rows().min(m.cols()) {
        prop_assert!(s.d.get(i, i).is_zero());
    }
    if m.rows() == m.cols() {
        let prod: BigInt = if s.rank == m.rows() { f.iter().product() } else { BigInt::zero() };
        prop_assert_eq!(m.det().abs(), prod);
    }
    Ok(())
}

pub fn rank_nullity(m: &IntMatrix) -> Outcome {
    let k = kernel_basis(m);
    prop_assert_eq!(k.cols() + m.rank(), m.cols());
    prop_assert!((m * &k).is_zero());
    prop_assert_eq!(k.rank(), k.cols());
    Ok(())
}

/// Every 2×2 integer matrix with `0 < |det| ≤ 12` and entries in `[−6, 6]`.
pub fn small_det_matrices() -> Vec<[[i64; 2]; 2]> {
    let mut out = Vec::new();
    for a in -6..=6i64 {
        for b in -6..=6i64 {
            for c in -6..=6i64 {
                for d in -6..=6i64 {
                    let det = a * d - b * c;
                    if det != 0 && det.abs() <= 12 {
                        out.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    out
}

/// Counts cosets of `M·ℤ²` inside the box `[0, |det|)²`, which meets every
/// coset, and compares with the cokernel order.
pub fn cokernel_order(rows: [[i64; 2]; 2]) -> Outcome {
    let m = IntMatrix::from_rows(&[rows[0].to_vec(), rows[1].to_vec()]);
    let det = (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]).abs();
    let lat = Lattice::column_span(&m);
    let mut cosets = BTreeSet::new();
    for x in 0..det {
        for y in 0..det {
            cosets.insert(lat.reduce(&big_vec(&[x, y])));
        }
    }
    prop_assert_eq!(cosets.len() as i64, det);
    prop_assert_eq!(cokernel(&m).order(), Some(BigInt::from(det)));
    Ok(())
}
