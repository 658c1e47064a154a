//! The circle operator algebra on the Fourier lattice: symbols, index,
//! trace and character.

pub mod character;
pub mod error;
pub mod function;
pub mod index;
pub mod operator;
pub mod shipped;
pub mod symbol;

pub use character::{character_matrix, odd_character_derivation, trace_tau, CharacterMatrix};
pub use error::CircleError;
pub use function::CircleFunction;
pub use index::{fredholm_index, index_data, kernel_dim_truncated, winding_number, IndexData};
pub use operator::{op_b, op_b_conj, op_b_flip, LatticeOperator};
pub use shipped::shipped_operator;
pub use symbol::{PrincipalSymbol, SequenceSymbol};
