//! The trace `τ` on symbols and the character matrix.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use super::function::CircleFunction;
use super::operator::LatticeOperator;

/// `c1·mean(σ(+∞)) + c2·mean(σ(−∞))`, means over normalized arclength.
pub fn trace_tau(op: &LatticeOperator, c1: f64, c2: f64) -> Complex64 {
    let s = op.principal_symbol();
    s.at_plus.mean() * c1 + s.at_minus.mean() * c2
}

/// Rows `(H⁰, H¹)`, columns `[H(D)]₀`, `[I − H(D)]₀`, `[𝔷]₁`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacterMatrix {
    pub entries: [[Complex64; 3]; 2],
}

impl CharacterMatrix {
    pub fn real_entries(&self) -> [[f64; 3]; 2] {
        self.entries.map(|row| row.map(|z| z.re))
    }

    pub fn max_imag(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.im.abs()).fold(0.0, f64::max)
    }
}

/// Column 3 as the mean of `σ_𝔷` over each boundary circle.
pub fn mean_recipe_column3(c1: f64, c2: f64) -> Complex64 {
    let z = CircleFunction::z();
    z.mean() * c1 + z.mean() * c2
}

pub fn character_matrix(c1: f64, c2: f64) -> CharacterMatrix {
    let zero = Complex64::new(0.0, 0.0);
    let h = trace_tau(&LatticeOperator::heaviside(), c1, c2);
    let co_h = trace_tau(&LatticeOperator::co_heaviside(), c1, c2);
    CharacterMatrix { entries: [[h, co_h, zero], [zero, zero, mean_recipe_column3(c1, c2)]] }
}

/// `(1/2πi)·τ(u*δu)` for `u = M_z`, with `δ` the rotation generator.
pub fn odd_character_derivation(c1: f64, c2: f64) -> Complex64 {
    let u = LatticeOperator::conv_z();
    let prod = LatticeOperator::product(vec![u.adjoint(), u.delta()]);
    trace_tau(&prod, c1, c2) / Complex64::new(0.0, TAU)
}
