//! Enumeration of the branching shapes available to a group with one
//! designated fixity-3 branching order and a few fixity-2 orders.
//!
//! A shape takes the fixity-3 order exactly once and each fixity-2 order
//! zero, one, or two times.  Its fixity is the witness-independent total
//! from the stabilizer formula, and only shapes whose total stays at or
//! below [`MAX_SHAPE_FIXITY`] are kept: a third copy of any fixity-2 order
//! would already push some class past the bound.

use group_atlas::AtlasGroup;
use perm_core::{Perm, RandomStream};

use crate::error::EngineError;
use crate::fixity::{accumulate_totals, GlobalClassFix};
use crate::search::random_of_order;

/// Largest admissible total number of fixed points for a shape.
pub const MAX_SHAPE_FIXITY: u64 = 4;

#[derive(Clone, Debug)]
pub struct Shape {
    pub branches: Vec<(u64, u32)>,
    pub fixity: u64,
    pub classes: Vec<GlobalClassFix>,
}

/// All admissible shapes of a group, sorted by branch list.  Errors if the
/// group has no designated fixity-3 order.
pub fn enumerate_shapes(
    atlas: &AtlasGroup,
    rng: &mut RandomStream,
) -> Result<Vec<Shape>, EngineError> {
    let Some(m3) = atlas.fixity3_order else {
        return Err(EngineError::Fixity(format!(
            "{} has no designated fixity-3 branching order",
            atlas.name
        )));
    };
    let g = &atlas.group;
    let c3 = random_of_order(g, m3, rng)?;
    let aux: Vec<(u64, Perm)> = atlas
        .fixity2_orders
        .iter()
        .map(|&m| Ok((m, random_of_order(g, m, rng)?)))
        .collect::<Result<_, EngineError>>()?;

    let mut shapes = Vec::new();
    for combo in 0..3usize.pow(aux.len() as u32) {
        let mut weighted = vec![(c3.clone(), 1u32)];
        let mut branches = vec![(m3, 1u32)];
        let mut rem = combo;
        for (m, c) in &aux {
            let n = (rem % 3) as u32;
            rem /= 3;
            if n > 0 {
                weighted.push((c.clone(), n));
                branches.push((*m, n));
            }
        }
        let totals = accumulate_totals(g, &weighted, rng)?;
        if totals.fixity <= MAX_SHAPE_FIXITY {
            branches.sort_unstable();
            shapes.push(Shape {
                branches,
                fixity: totals.fixity,
                classes: totals.classes,
            });
        }
    }
    shapes.sort_by(|a, b| a.branches.cmp(&b.branches));
    Ok(shapes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_atlas::lookup;

    fn branch_lists(shapes: &[Shape]) -> Vec<Vec<(u64, u32)>> {
        shapes.iter().map(|s| s.branches.clone()).collect()
    }

    #[test]
    fn psl27_has_nine_admissible_shapes() {
        let atlas = lookup("L2(7)").unwrap();
        let mut rng = RandomStream::new(41);
        let shapes = enumerate_shapes(&atlas, &mut rng).unwrap();
        assert_eq!(
            branch_lists(&shapes),
            vec![
                vec![(3, 1), (4, 1), (7, 1)],
                vec![(3, 1), (4, 2), (7, 1)],
                vec![(3, 1), (7, 1)],
                vec![(3, 2), (4, 1), (7, 1)],
                vec![(3, 2), (4, 2), (7, 1)],
                vec![(3, 2), (7, 1)],
                vec![(4, 1), (7, 1)],
                vec![(4, 2), (7, 1)],
                vec![(7, 1)],
            ]
        );
        let fixity_of = |branches: &[(u64, u32)]| {
            shapes
                .iter()
                .find(|s| s.branches == branches)
                .map(|s| s.fixity)
                .unwrap()
        };
        assert_eq!(fixity_of(&[(7, 1)]), 3);
        assert_eq!(fixity_of(&[(3, 2), (4, 2), (7, 1)]), 4);
        assert_eq!(fixity_of(&[(4, 2), (7, 1)]), 4);
        assert_eq!(fixity_of(&[(3, 1), (4, 1), (7, 1)]), 3);
    }

    #[test]
    fn psl34_has_three_and_m22_one() {
        let mut rng = RandomStream::new(42);
        let l34 = enumerate_shapes(&lookup("L3(4)").unwrap(), &mut rng).unwrap();
        assert_eq!(
            branch_lists(&l34),
            vec![
                vec![(5, 1), (7, 1)],
                vec![(5, 2), (7, 1)],
                vec![(7, 1)],
            ]
        );
        let m22 = enumerate_shapes(&lookup("M22").unwrap(), &mut rng).unwrap();
        assert_eq!(branch_lists(&m22), vec![vec![(7, 1)]]);
        assert_eq!(m22[0].fixity, 3);
    }

    #[test]
    fn groups_without_designated_order_are_rejected() {
        let atlas = lookup("A5").unwrap();
        let mut rng = RandomStream::new(43);
        assert!(enumerate_shapes(&atlas, &mut rng).is_err());
    }
}
