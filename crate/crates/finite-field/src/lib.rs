//! Finite fields GF(p^f) with table-based arithmetic, small matrices,
//! projective spaces, Hermitian geometry, and validated constructions of
//! PSL_n(q) and PSU_n(q) as permutation groups on projective points.

pub mod error;
pub mod field;
pub mod groups;
pub mod matrix;
pub mod projective;
pub mod unitary;

pub use error::FieldError;
pub use field::Field;
pub use groups::{prime_power, psl, psl_order, psu, psu_order};
pub use matrix::Mat;
pub use projective::{normalize, ProjSpace};
