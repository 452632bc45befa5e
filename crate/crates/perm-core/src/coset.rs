//! Right coset actions with canonical coset representatives.
//!
//! Cosets Hg are labeled by a canonical representative found greedily along
//! H's stabilizer chain: at each level the base image is minimized over the
//! basic orbit.  Representatives are sorted by image array, which places the
//! coset H itself at point 0 whenever each chain base is the minimum of its
//! orbit (true in particular for cyclic H); this is asserted at build time.

use indexmap::IndexSet;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::chain::StabChain;
use crate::error::PermError;
use crate::group::PermGroup;
use crate::perm::Perm;

/// Default ceiling for the number of cosets.
pub const DEFAULT_MAX_INDEX: u64 = 500_000;

pub struct CosetAction {
    index: u64,
    image: PermGroup,
    /// Canonical representatives, packed one byte per point, sorted.
    reps: Vec<Box<[u8]>>,
    subgroup: PermGroup,
}

impl CosetAction {
    /// Builds the action of `g` on the right cosets of `h` by right
    /// multiplication.  The subgroup is consumed; its chain keeps serving the
    /// canonical-representative computation.
    pub fn new(g: &PermGroup, h: PermGroup, max_index: u64) -> Result<CosetAction, PermError> {
        if h.degree() != g.degree() {
            return Err(PermError::DegreeMismatch(h.degree(), g.degree()));
        }
        if g.degree() > 256 {
            return Err(PermError::DegreeTooLarge(g.degree(), 256));
        }
        for gen in h.generators() {
            if !g.contains(gen) {
                return Err(PermError::NotSubgroup(gen.cycle_string()));
            }
        }
        let (index_big, rem) = g.order().div_rem(h.order());
        if !rem.is_zero() {
            return Err(PermError::BadIndex);
        }
        let index = index_big
            .to_u64()
            .filter(|&n| n <= max_index)
            .ok_or_else(|| {
                PermError::IndexTooLarge(index_big.to_u64().unwrap_or(u64::MAX), max_index)
            })?;

        let degree = g.degree();
        let mut reps: IndexSet<Box<[u8]>> = IndexSet::new();
        reps.insert(pack1(&canon_rep(&h, &Perm::identity(degree))));
        let mut at = 0;
        while at < reps.len() {
            let r = unpack1(&reps[at]);
            for s in g.generators() {
                reps.insert(pack1(&canon_rep(&h, &(&r * s))));
            }
            at += 1;
        }
        assert_eq!(
            reps.len() as u64,
            index,
            "coset enumeration disagrees with the index"
        );
        let mut reps: Vec<Box<[u8]>> = reps.into_iter().collect();
        reps.sort_unstable();
        assert!(
            unpack1(&reps[0]).is_identity(),
            "identity coset is not the first point"
        );

        let action = |w: &Perm| -> Perm {
            let images = reps
                .iter()
                .map(|r| {
                    let target = pack1(&canon_rep(&h, &(&unpack1(r) * w)));
                    reps.binary_search(&target).expect("coset closed") as u32
                })
                .collect::<Vec<u32>>();
            Perm::from_images(images).expect("coset action is a permutation")
        };
        let image_gens: Vec<Perm> = g.generators().iter().map(&action).collect();
        let seeds: Vec<Perm> = h.generators().iter().map(&action).collect();

        // Exact image order: the stabilizer of point 0 is precisely the image
        // of H, so |image| = index * |<seeds>| by orbit counting.
        let stab_order = StabChain::build(index as usize, &seeds, None, &[]).order();
        let expected = BigUint::from(index) * stab_order;
        let image =
            PermGroup::from_generators_with_order(index as usize, image_gens, expected, &seeds)?;

        Ok(CosetAction {
            index,
            image,
            reps,
            subgroup: h,
        })
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// The permutation group induced on the cosets.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    /// Image of an arbitrary element of the parent group.
    pub fn image_of(&self, g: &Perm) -> Result<Perm, PermError> {
        if g.degree() != self.subgroup.degree() {
            return Err(PermError::DegreeMismatch(g.degree(), self.subgroup.degree()));
        }
        let images = self
            .reps
            .iter()
            .map(|r| {
                let target = pack1(&canon_rep(&self.subgroup, &(&unpack1(r) * g)));
                self.reps
                    .binary_search(&target)
                    .map(|j| j as u32)
                    .map_err(|_| PermError::NotMember)
            })
            .collect::<Result<Vec<u32>, PermError>>()?;
        Perm::from_images(images).map_err(|_| PermError::NotMember)
    }
}

/// Canonical representative of the coset Hg: along H's chain, pick the
/// transversal element minimizing the base image and absorb it into g.
fn canon_rep(h: &PermGroup, g: &Perm) -> Perm {
    let chain = h.chain();
    let mut r = g.clone();
    for level in 0..chain.num_levels() {
        let orbit = chain.level_orbit(level);
        let mut best = orbit[0];
        let mut best_img = r.apply(orbit[0]);
        for &p in &orbit[1..] {
            let img = r.apply(p);
            if img < best_img {
                best = p;
                best_img = img;
            }
        }
        if best != orbit[0] {
            r = &chain.level_transversal(level, best) * &r;
        }
    }
    r
}

fn pack1(p: &Perm) -> Box<[u8]> {
    p.images().iter().map(|&x| x as u8).collect()
}

fn unpack1(bytes: &[u8]) -> Perm {
    Perm::from_images(bytes.iter().map(|&b| b as u32).collect()).expect("stored rep is valid")
}
