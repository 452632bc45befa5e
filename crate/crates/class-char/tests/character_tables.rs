//! Exact orthogonality for the whole verification set, plus pinned class
//! data and degrees where they are known in closed form.

use class_char::{character_table, Classes};
use group_atlas::lookup;
use perm_core::RandomStream;

/// Builds classes and the character table, runs the exact verification
/// (orthogonality in Z[zeta_e], degree sum, trivial character), and checks
/// the class equation.
fn verify_group(name: &str, seed: u64) {
    let g = lookup(name).unwrap().group;
    let order = g.order_u64().unwrap();
    let classes = Classes::build(&g, &mut RandomStream::new(seed)).unwrap();
    assert_eq!(
        classes.iter().map(|c| c.size).sum::<u64>(),
        order,
        "{name}: class equation"
    );
    for c in classes.iter() {
        assert_eq!(order % c.size, 0, "{name}: class size divides order");
        assert_eq!(order % c.element_order, 0, "{name}: element order divides");
    }
    let table = character_table(&g, &classes).unwrap();
    table.verify().unwrap_or_else(|e| panic!("{name}: {e}"));
}

#[test]
fn small_groups_verify_exactly() {
    verify_group("S3", 51);
    verify_group("S4", 52);
    verify_group("A5", 53);
    verify_group("L2(7)", 54);
}

#[test]
fn medium_groups_verify_exactly() {
    verify_group("L3(3)", 55);
    verify_group("U3(3)", 56);
    verify_group("A7", 57);
}

#[test]
fn degree_20160_groups_verify_exactly() {
    verify_group("L3(4)", 58);
    verify_group("A8", 59);
}

#[test]
fn m22_verifies_exactly() {
    verify_group("M22", 60);
}

#[test]
fn psl_2_7_pinned_table() {
    let g = lookup("L2(7)").unwrap().group;
    let classes = Classes::build(&g, &mut RandomStream::new(61)).unwrap();
    let profile: Vec<(u64, u64)> = classes.iter().map(|c| (c.element_order, c.size)).collect();
    assert_eq!(
        profile,
        [(1, 1), (2, 21), (3, 56), (4, 42), (7, 24), (7, 24)]
    );
    let table = character_table(&g, &classes).unwrap();
    table.verify().unwrap();
    assert_eq!(table.degrees(), &[1, 3, 3, 6, 7, 8]);
    // The two 7-dimensional-row neighbours: the degree-3 characters take the
    // golden-ratio-like values (-1 +- sqrt(-7))/2 on the order-7 classes and
    // are swapped by conjugation there.
    let red = table.reducer();
    let sum = table.value(1, 4).add(table.value(2, 4));
    assert!(red.is_int(&sum, -1));
    assert_eq!(table.value(1, 4), &table.value(2, 4).conj());
}

#[test]
fn a7_pinned_degrees() {
    let g = lookup("A7").unwrap().group;
    let classes = Classes::build(&g, &mut RandomStream::new(62)).unwrap();
    let table = character_table(&g, &classes).unwrap();
    assert_eq!(table.degrees(), &[1, 6, 10, 10, 14, 14, 15, 21, 35]);
}

#[test]
fn m22_pinned_shape() {
    let g = lookup("M22").unwrap().group;
    let classes = Classes::build(&g, &mut RandomStream::new(63)).unwrap();
    assert_eq!(classes.len(), 12);
    assert_eq!(classes.exponent(), 9240);
    let orders: Vec<u64> = classes.iter().map(|c| c.element_order).collect();
    assert_eq!(orders, [1, 2, 3, 4, 4, 5, 6, 7, 7, 8, 11, 11]);
    let table = character_table(&g, &classes).unwrap();
    assert_eq!(
        table.degrees(),
        &[1, 21, 45, 45, 55, 99, 154, 210, 231, 280, 280, 385]
    );
}
