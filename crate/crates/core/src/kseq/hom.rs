//! Kernels, images and cokernels of integer matrices, plain and between
//! presented groups.

use num_bigint::BigInt;

use super::group::{FGAbelian, Presented};
use super::intmat::{smith, IntMatrix};
use super::lattice::Lattice;

pub fn kernel_lattice(m: &IntMatrix) -> Lattice {
    Lattice::from_generators(m.cols(), smith(m).kernel_columns())
}

/// Columns generating `ker M`, in Hermite form.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    kernel_lattice(m).basis_matrix()
}

/// Columns generating `im M`, in Hermite form.
pub fn image_lattice(m: &IntMatrix) -> IntMatrix {
    Lattice::column_span(m).basis_matrix()
}

/// `ℤ^rows / im M`, labelled by canonical coset representatives.
pub fn cokernel(m: &IntMatrix) -> FGAbelian {
    Presented::new(m.rows(), Lattice::column_span(m)).group()
}

/// Whether `M` sends the relations of `dom` into those of `cod`.
pub fn is_well_defined(m: &IntMatrix, dom: &Presented, cod: &Presented) -> bool {
    m.cols() == dom.gens
        && m.rows() == cod.gens
        && dom.relations.basis().iter().all(|r| cod.relations.contains(&m.apply(r)))
}

/// `{x : Mx ∈ R_cod}`, a lattice containing `R_dom`.
pub fn kernel_of(m: &IntMatrix, dom: &Presented, cod: &Presented) -> Lattice {
    let a = dom.gens;
    let stacked = m.hstack(&cod.relations.basis_matrix());
    let gens = smith(&stacked).kernel_columns().into_iter().map(|v| v[..a].to_vec());
    Lattice::from_generators(a, gens).sum(&dom.relations)
}

/// `im M + R_cod`.
pub fn image_of(m: &IntMatrix, cod: &Presented) -> Lattice {
    Lattice::column_span(m).sum(&cod.relations)
}

pub fn cokernel_of(m: &IntMatrix, cod: &Presented) -> Presented {
    Presented::new(cod.gens, image_of(m, cod))
}

pub fn column(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_cokernel_of_the_degree_zero_map() {
        let m = IntMatrix::from_rows(&[vec![-1, 1], vec![0, 0]]);
        assert_eq!(kernel_basis(&m), IntMatrix::from_rows(&[vec![1], vec![1]]));
        assert_eq!(cokernel(&m).labeled(), "ℤ[(0,1)]");
    }

    #[test]
    fn injective_map_with_two_torsion() {
        let m = IntMatrix::from_rows(&[vec![0, 2], vec![-1, -1]]);
        assert_eq!(kernel_basis(&m).cols(), 0);
        assert_eq!(cokernel(&m).labeled(), "ℤ₂[(1,0)]");
    }

    #[test]
    fn zero_map() {
        let m = IntMatrix::zeros(2, 2);
        assert_eq!(kernel_basis(&m).cols(), 2);
        assert_eq!(cokernel(&m).short(), "ℤ²");
        assert_eq!(image_lattice(&m).cols(), 0);
    }

    #[test]
    fn kernel_into_a_torsion_group() {
        // ℤ → ℤ₂, 1 ↦ 1: kernel 2ℤ
        let dom = Presented::free(1);
        let cod = Presented::new(1, Lattice::from_generators(1, [column(&[2])]));
        let m = IntMatrix::from_rows(&[vec![1]]);
        assert!(is_well_defined(&m, &dom, &cod));
        assert_eq!(kernel_of(&m, &dom, &cod), Lattice::from_generators(1, [column(&[2])]));
        // ℤ₂ → ℤ, 1 ↦ 1 is not a homomorphism
        assert!(!is_well_defined(&m, &cod, &dom));
    }
}
