//! Operator specs bundled with the crate.

use super::operator::LatticeOperator;

pub const SHIPPED: &[(&str, &str)] = &[
    ("identity", include_str!("../../data/operators/identity.json")),
    ("conv_z", include_str!("../../data/operators/conv_z.json")),
    ("heaviside", include_str!("../../data/operators/heaviside.json")),
    ("b", include_str!("../../data/operators/b.json")),
    ("b_conj", include_str!("../../data/operators/b_conj.json")),
    ("b_flip", include_str!("../../data/operators/b_flip.json")),
];

pub fn shipped_spec(name: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn shipped_operator(name: &str) -> Option<LatticeOperator> {
    shipped_spec(name).map(|s| LatticeOperator::from_json(s).expect("shipped specs parse"))
}
