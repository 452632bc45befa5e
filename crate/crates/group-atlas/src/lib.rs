//! A small atlas of named finite simple (and near-simple) permutation groups:
//! alternating and symmetric groups, PSL and PSU families over small fields,
//! and the Mathieu group M22.  Every construction validates its chain order
//! against the closed-form group order.

mod atlas;
mod error;

pub use atlas::{
    alternating, lookup, m22, stabilizer_subgroup, symmetric, AtlasGroup,
};
pub use error::AtlasError;
