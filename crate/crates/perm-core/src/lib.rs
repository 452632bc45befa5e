//! Permutation groups: cycle-notation permutations, verified stabilizer
//! chains, uniform random elements, and coset actions with canonical
//! representatives.
//!
//! Composition is left to right throughout: `(p * q)` maps x to `q(p(x))`,
//! conjugation is `g^h = h^-1 g h`, and `[g, h] = g^-1 h^-1 g h`.

pub mod chain;
pub mod coset;
pub mod error;
pub mod group;
pub mod perm;
pub mod rng;

pub use chain::StabChain;
pub use coset::{CosetAction, DEFAULT_MAX_INDEX};
pub use error::PermError;
pub use group::{PermGroup, MAX_ENUMERATION};
pub use perm::{Perm, MAX_DEGREE};
pub use rng::RandomStream;
