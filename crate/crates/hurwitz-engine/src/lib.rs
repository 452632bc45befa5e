//! Decides when a finite simple permutation group acts on a compact Riemann
//! surface with a prescribed branching datum, and measures how many points
//! the group elements fix in the corresponding transitive action.
//!
//! The crate revolves around three objects: a [`Datum`] records the group
//! name, surface genus, quotient cogenus, and branching orders; a
//! [`Witness`] is a tuple of permutations certifying that the datum is
//! realizable; and a fixity report bounds the number of fixed points of
//! every nontrivial element in the action on the cosets of a cyclic
//! branch-point stabilizer.

mod datum;
mod error;
mod fixity;
mod lemma;
mod search;
mod shapes;
mod table;
mod tuple;

pub use datum::{solve_genus, Datum};
pub use error::EngineError;
pub use fixity::{
    fixed_points, fixity_report, global_fixity, ClassFix, FixityReport, GlobalClassFix,
    GlobalFixity,
};
pub use lemma::{verify_psl3_lemma, Psl3Report, MAX_Q, MIN_Q};
pub use search::{
    search_constructive, search_witness, Outcome, Strategy, DEFAULT_BUDGET, MAX_EXHAUSTIVE_ORDER,
};
pub use shapes::{enumerate_shapes, Shape, MAX_SHAPE_FIXITY};
pub use table::{reproduce_table, LineReport, LineVerdict, TableOptions};
pub use tuple::{read_tuple, validate, write_tuple, Witness};
