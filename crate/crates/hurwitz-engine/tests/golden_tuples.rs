//! Every frozen reference tuple validates against its datum, and the
//! witnesses behave as exact certificates: file round trips preserve them
//! and their global fixity stays within the mixed-fixity bound.

mod common;

use common::{build, GOLDEN};
use hurwitz_engine::{global_fixity, read_tuple, validate, write_tuple};
use perm_core::RandomStream;

#[test]
fn all_reference_tuples_validate() {
    for golden in GOLDEN {
        let (g, w) = build(golden);
        validate(&g, &w).unwrap_or_else(|e| panic!("{golden:?}: {e}"));
    }
}

#[test]
fn reference_tuples_round_trip_through_files() {
    for golden in GOLDEN {
        let (g, w) = build(golden);
        let text = write_tuple(&w);
        let back = read_tuple(&text, g.degree()).unwrap();
        assert_eq!(back, w, "{golden:?}");
    }
}

#[test]
fn small_group_reference_tuples_have_bounded_global_fixity() {
    let mut rng = RandomStream::new(71);
    for golden in GOLDEN.iter().filter(|t| t.name == "L2(7)" || t.name == "L3(4)") {
        let (g, w) = build(golden);
        let gf = global_fixity(&g, &w, &mut rng).unwrap();
        assert!(
            (3..=4).contains(&gf.fixity),
            "{golden:?}: fixity {}",
            gf.fixity
        );
    }
}
