//! Conjugacy classes, ordinary character tables, and exact class-algebra
//! counts for permutation groups of moderate order.

pub mod classes;
pub mod counts;
pub mod cyclotomic;
pub mod dixon;
pub mod error;

pub use classes::{conjugator, fingerprint, Classes, ConjOrbit, MAX_CLASSIFIED_ORDER, MAX_ORBIT};
pub use counts::{commutator_solution_count, frobenius_count};
pub use cyclotomic::{CycInt, Reducer};
pub use dixon::{character_table, CharacterTable};
pub use error::ClassError;
