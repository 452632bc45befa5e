//! Frozen reference tuples: for each supported group and branch list, a
//! generating tuple in explicit cycle notation together with the unique
//! genus its datum solves to.  The permutations are written in the point
//! labeling of the source computations; all validation is conjugation
//! invariant, so they certify the datum for any faithful copy of the group.

use group_atlas::lookup;
use hurwitz_engine::{Datum, Witness};
use perm_core::{Perm, PermGroup};

pub struct Golden {
    pub name: &'static str,
    pub cogenus: u32,
    pub branches: &'static [(u64, u32)],
    pub genus: i128,
    pub elems: &'static [&'static str],
}

pub const GOLDEN: &[Golden] = &[
    Golden {
        name: "A7",
        cogenus: 1,
        branches: &[(7, 1)],
        genus: 1081,
        elems: &["(1,7,2,6)(3,5)", "(3,4,6,7,5)", "(1,2,3,4,5,7,6)"],
    },
    Golden {
        name: "L2(7)",
        cogenus: 1,
        branches: &[(7, 1)],
        genus: 73,
        elems: &["(1,2,5)(3,7,8)", "(1,2,6,8)(3,7,5,4)", "(2,4,6,5,8,3,7)"],
    },
    Golden {
        name: "L2(7)",
        cogenus: 1,
        branches: &[(3, 1), (7, 1)],
        genus: 129,
        elems: &[
            "(1,8,5)(2,6,3)",
            "(1,2)(3,6)(4,5)(7,8)",
            "(1,2,5)(3,7,8)",
            "(2,3,5,4,7,8,6)",
        ],
    },
    Golden {
        name: "L2(7)",
        cogenus: 0,
        branches: &[(3, 2), (7, 1)],
        genus: 17,
        elems: &["(1,8,4)(2,7,3)", "(1,2,8)(4,5,6)", "(2,4,6,5,8,3,7)"],
    },
    Golden {
        name: "L2(7)",
        cogenus: 1,
        branches: &[(4, 1), (7, 1)],
        genus: 136,
        elems: &[
            "(1,6)(2,5)(3,7)(4,8)",
            "(1,8,6)(2,7,5)",
            "(1,2,8,4)(3,7,6,5)",
            "(2,4,6,5,8,3,7)",
        ],
    },
    Golden {
        name: "L2(7)",
        cogenus: 0,
        branches: &[(4, 2), (7, 1)],
        genus: 31,
        elems: &["(1,7,6,3)(2,8,5,4)", "(1,2,5,7)(3,8,6,4)", "(2,3,5,4,7,8,6)"],
    },
    Golden {
        name: "L2(7)",
        cogenus: 0,
        branches: &[(3, 1), (4, 1), (7, 1)],
        genus: 24,
        elems: &["(1,8,3)(4,7,5)", "(1,2,6,8)(3,7,5,4)", "(2,3,5,4,7,8,6)"],
    },
    Golden {
        name: "L2(7)",
        cogenus: 0,
        branches: &[(3, 2), (4, 1), (7, 1)],
        genus: 80,
        elems: &[
            "(1,3,8)(4,5,7)",
            "(1,2,5)(3,7,8)",
            "(1,2,5,7)(3,8,6,4)",
            "(2,4,6,5,8,3,7)",
        ],
    },
    Golden {
        name: "L2(7)",
        cogenus: 0,
        branches: &[(3, 1), (4, 2), (7, 1)],
        genus: 87,
        elems: &[
            "(2,4,5)(3,8,6)",
            "(1,7,4,5)(2,8,3,6)",
            "(1,2,5,7)(3,8,6,4)",
            "(2,4,6,5,8,3,7)",
        ],
    },
    Golden {
        name: "L2(7)",
        cogenus: 0,
        branches: &[(3, 2), (4, 2), (7, 1)],
        genus: 143,
        elems: &[
            "(2,4,3)(5,7,8)",
            "(1,5,2)(3,8,7)",
            "(1,2,6,8)(3,7,5,4)",
            "(1,2,8,4)(3,7,6,5)",
            "(2,4,6,5,8,3,7)",
        ],
    },
    Golden {
        name: "A8",
        cogenus: 1,
        branches: &[(7, 1)],
        genus: 8641,
        elems: &["(1,3,2,5,7)(4,8,6)", "(2,4,5,6,8,7,3)", "(1,2,3,4,5,6,8)"],
    },
    Golden {
        name: "M22",
        cogenus: 1,
        branches: &[(7, 1)],
        genus: 190081,
        elems: &[
            "(1,3,18,14,6,10,17,21,13,5,11)(2,7,8,16,12,4,9,20,22,15,19)",
            "(1,19,12,13,3,11)(2,5,16,9,7,14)(4,8,10)(6,17)(15,22,20)(18,21)",
            "(1,12,15,8,5,4,21)(2,13,20,19,3,14,11)(6,9,17,7,16,18,10)",
        ],
    },
    Golden {
        name: "L4(3)",
        cogenus: 1,
        branches: &[(13, 1)],
        genus: 2799361,
        elems: &[
            "(1,19,5,30,3)(2,18,37,39,25)(4,17,28,21,26)(6,10,9,29,20)(7,32,13,31,15)(8,33,38,40,11)(12,34,24,22,36)(14,35,23,16,27)",
            "(1,36,27,10,15,32,17,34,28,20,39,19,4)(2,35,5,16,40,6,29,9,11,13,31,23,21)(3,37,18,38,26,25,8,30,22,33,7,12,14)",
            "(1,2,6,4,12,13,10,11,7,3,9,8,5)(15,20,24,21,30,31,28,35,33,22,27,38,23)(16,17,34,19,37,36,39,29,25,18,40,26,32)",
        ],
    },
    Golden {
        name: "L3(4)",
        cogenus: 1,
        branches: &[(5, 1), (7, 1)],
        genus: 16705,
        elems: &[
            "(3,5,4)(6,20,11)(7,18,12)(8,19,10)(9,21,13)(14,16,15)",
            "(1,13,3,5,20,10,19)(2,15,17,9,18,11,14)(4,6,7,16,21,12,8)",
            "(2,13,20,7,14)(3,12,18,9,15)(4,11,19,8,16)(5,10,21,6,17)",
            "(1,3,14,16,6,2,8)(4,19,15,21,18,12,7)(5,13,17,11,10,20,9)",
        ],
    },
    Golden {
        name: "L3(4)",
        cogenus: 0,
        branches: &[(5, 2), (7, 1)],
        genus: 4609,
        elems: &[
            "(1,21,18,19,20)(2,9,12,6,5)(3,17,15,4,13)(7,14,10,16,8)",
            "(2,13,15,8,18)(3,12,16,7,19)(4,11,14,9,20)(5,10,17,6,21)",
            "(1,20,2,21,12,13,5)(3,18,16,9,7,10,6)(4,19,8,17,14,11,15)",
        ],
    },
];

/// Builds the group and witness for one reference tuple, checking the
/// pinned genus along the way.
pub fn build(golden: &Golden) -> (PermGroup, Witness) {
    let atlas = lookup(golden.name).unwrap();
    let g = atlas.group;
    let order = g.order_u64().unwrap();
    let datum = Datum::solved(golden.name, order, golden.cogenus, golden.branches).unwrap();
    assert_eq!(datum.genus, golden.genus, "{golden:?} genus");
    let perms: Vec<Perm> = golden
        .elems
        .iter()
        .map(|s| Perm::parse(s, g.degree()).unwrap())
        .collect();
    let k = golden.cogenus as usize;
    assert_eq!(perms.len(), 2 * k + datum.num_branch_points() as usize);
    let handles = (0..k).map(|i| (perms[2 * i].clone(), perms[2 * i + 1].clone())).collect();
    let branch_elems = perms[2 * k..].to_vec();
    (
        g,
        Witness {
            datum,
            handles,
            branch_elems,
        },
    )
}

impl std::fmt::Debug for Golden {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} cogenus {} branches {:?}",
            self.name, self.cogenus, self.branches
        )
    }
}
