//! Fixed-point counts in the transitive action of a group on the cosets of
//! a cyclic branch-point stabilizer.
//!
//! For a stabilizer C = <c> of order m, a nontrivial element h fixes
//! exactly |C_G(h)| * #{s in 1..m : c^s ~ h} / m cosets, and the identity
//! fixes all |G|/m of them.  Both the per-action and the per-witness
//! (summed over all branch points) variants are computed with exact integer
//! arithmetic, and the per-action table is checked against the Burnside
//! identity before it is returned.

use class_char::{Classes, ConjOrbit};
use perm_core::{Perm, PermGroup, RandomStream};

use crate::error::EngineError;
use crate::search::random_of_order;
use crate::tuple::{validate, Witness};

/// Fixed points of a single element on the cosets of <c>.
pub fn fixed_points(
    g: &PermGroup,
    h: &Perm,
    c: &Perm,
    rng: &mut RandomStream,
) -> Result<u64, EngineError> {
    let order = group_order(g)?;
    let m = c.order();
    if m < 2 {
        return Err(EngineError::Fixity("stabilizer generator is trivial".into()));
    }
    if order % m != 0 {
        return Err(EngineError::Fixity(format!(
            "stabilizer order {m} does not divide the group order {order}"
        )));
    }
    if h.is_identity() {
        return Ok(order / m);
    }
    let orbit = ConjOrbit::enumerate(g, h, rng)?;
    let hits = (1..m).filter(|&s| orbit.contains(&c.pow(s))).count() as u64;
    exact_share(orbit.centralizer_order, hits, m)
}

/// Fixed points of one conjugacy class, for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFix {
    pub element_order: u64,
    pub class_size: u64,
    pub fixed_points: u64,
}

/// Fixed-point counts of every nontrivial class on the cosets of a cyclic
/// subgroup of order m, together with their maximum.
#[derive(Clone, Debug)]
pub struct FixityReport {
    pub group: String,
    pub stabilizer_order: u64,
    pub orbit_size: u64,
    pub classes: Vec<ClassFix>,
    pub fixity: u64,
}

/// Full fixity table for the action on the cosets of <c> with c of order m.
/// Requires the complete classification, so the group order is capped at
/// the class-enumeration bound.
pub fn fixity_report(
    g: &PermGroup,
    name: &str,
    m: u64,
    rng: &mut RandomStream,
) -> Result<FixityReport, EngineError> {
    let order = group_order(g)?;
    if m < 2 || order % m != 0 {
        return Err(EngineError::Fixity(format!(
            "no cyclic stabilizer of order {m} in a group of order {order}"
        )));
    }
    let classes = Classes::build(g, rng)?;
    let c = random_of_order(g, m, rng)?;
    let power_class: Vec<usize> = (1..m)
        .map(|s| {
            classes
                .classify(&c.pow(s))
                .expect("powers of a group element stay in the group")
        })
        .collect();

    let orbit_size = order / m;
    let mut table = Vec::with_capacity(classes.len().saturating_sub(1));
    let mut burnside = orbit_size;
    for i in 0..classes.len() {
        let info = classes.class(i);
        if info.element_order == 1 {
            continue;
        }
        debug_assert_eq!(order % info.size, 0);
        let centralizer = order / info.size;
        let hits = power_class.iter().filter(|&&p| p == i).count() as u64;
        let fix = exact_share(centralizer, hits, m)?;
        burnside += info.size * fix;
        table.push(ClassFix {
            element_order: info.element_order,
            class_size: info.size,
            fixed_points: fix,
        });
    }
    if burnside != order {
        return Err(EngineError::Fixity(format!(
            "Burnside check failed: total fixed points {burnside}, group order {order}"
        )));
    }
    let fixity = table.iter().map(|c| c.fixed_points).max().unwrap_or(0);
    Ok(FixityReport {
        group: name.to_string(),
        stabilizer_order: m,
        orbit_size,
        classes: table,
        fixity,
    })
}

/// Total fixed points of one class summed over every branch point of a
/// witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalClassFix {
    pub element_order: u64,
    pub class_size: u64,
    pub fixed_points: u64,
}

/// Classes with a nonzero total and the maximum total; every class outside
/// the list fixes nothing anywhere on the surface.
#[derive(Clone, Debug)]
pub struct GlobalFixity {
    pub classes: Vec<GlobalClassFix>,
    pub fixity: u64,
}

/// Sums, class by class, the fixed points over the branch-point actions of
/// a validated witness.  Only the classes met by powers of the branch
/// elements are enumerated, so this scales to groups far beyond the full
/// classification bound.
///
/// Classes are enumerated inside the group generated by the tuple itself.
/// Witness validation is conjugation invariant, so the tuple may live in a
/// relabeled copy of `g`; every quantity used here (class size, centralizer
/// order, power conjugacy) transfers along the isomorphism.
pub fn global_fixity(
    g: &PermGroup,
    w: &Witness,
    rng: &mut RandomStream,
) -> Result<GlobalFixity, EngineError> {
    validate(g, w)?;
    let wg = PermGroup::from_generators(g.degree(), w.elements())?;
    let weighted: Vec<(Perm, u32)> = w.branch_elems.iter().map(|c| (c.clone(), 1)).collect();
    accumulate_totals(&wg, &weighted, rng)
}

/// Shared accumulation: per class K met by a power of some generator c,
/// sum multiplicity * |C_K| * #{s in 1..m : c^s in K} / m.  The generators
/// must be members of `wg`.
pub(crate) fn accumulate_totals(
    wg: &PermGroup,
    weighted: &[(Perm, u32)],
    rng: &mut RandomStream,
) -> Result<GlobalFixity, EngineError> {
    let mut orbits: Vec<ConjOrbit> = Vec::new();
    for (c, _) in weighted {
        for s in 1..c.order() {
            let h = c.pow(s);
            if !orbits.iter().any(|o| o.contains(&h)) {
                orbits.push(ConjOrbit::enumerate(wg, &h, rng)?);
            }
        }
    }
    let mut classes = Vec::with_capacity(orbits.len());
    let mut fixity = 0;
    for orbit in &orbits {
        let mut total = 0;
        for (c, mult) in weighted {
            let m = c.order();
            let hits = (1..m).filter(|&s| orbit.contains(&c.pow(s))).count() as u64;
            total += u64::from(*mult) * exact_share(orbit.centralizer_order, hits, m)?;
        }
        fixity = fixity.max(total);
        classes.push(GlobalClassFix {
            element_order: orbit.base().order(),
            class_size: orbit.len() as u64,
            fixed_points: total,
        });
    }
    classes.sort_by_key(|c| (c.element_order, c.class_size, c.fixed_points));
    Ok(GlobalFixity { classes, fixity })
}

fn group_order(g: &PermGroup) -> Result<u64, EngineError> {
    g.order_u64()
        .ok_or_else(|| EngineError::Fixity("group order exceeds u64".into()))
}

/// centralizer * hits / m, which the counting argument guarantees to be an
/// integer; a remainder would mean a misclassified power.
fn exact_share(centralizer: u64, hits: u64, m: u64) -> Result<u64, EngineError> {
    let product = centralizer
        .checked_mul(hits)
        .ok_or_else(|| EngineError::Fixity("fixed-point count overflows u64".into()))?;
    if product % m != 0 {
        return Err(EngineError::Fixity(format!(
            "non-integral fixed-point count {centralizer}*{hits}/{m}"
        )));
    }
    Ok(product / m)
}
