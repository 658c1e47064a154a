//! Exact integer linear algebra for finitely generated abelian groups and
//! six-term exact sequences.

pub mod diagram;
pub mod error;
pub mod group;
pub mod hom;
pub mod intmat;
pub mod lattice;
pub mod monomial;
pub mod sixterm;
pub mod suspension;

pub use error::KseqError;
pub use group::{FGAbelian, Presented};
pub use hom::{cokernel, image_lattice, kernel_basis};
pub use intmat::{smith, smith_normal_form, IntMatrix};
pub use lattice::Lattice;
pub use sixterm::{solve_six_term, verify_exactness, verify_hexagon, SixTermInstance, SolvedSixTerm};
pub use diagram::{load_shipped, parse_with_shipped, run_diagram, run_shipped, DiagramRun};
pub use monomial::{induced_monomial_map_k1, Monomial};
pub use suspension::suspension_split;
