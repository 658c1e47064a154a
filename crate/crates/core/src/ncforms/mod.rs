//! Exact noncommutative differential forms over one unitary generator.

pub mod error;
pub mod form;
pub mod gauss;
pub mod integrate;
pub mod matrix;
pub mod poly;
pub mod ptheta;
pub mod trace;
pub mod trig;
pub mod oracle;
pub mod verify;
pub mod word;

pub use error::FormError;
pub use form::{Basis, NCForm};
pub use gauss::GaussRational;
pub use integrate::{integrate_theta, IntegralValue};
pub use matrix::NcMatrix;
pub use poly::NCPoly;
pub use ptheta::{build_p_theta, PTheta};
pub use trace::{reduce_mod_delta_exact, trace_cyclic_normal_form, TraceClass};
pub use trig::TrigPoly;
pub use word::{Letter, Word};
