//! Permutation groups backed by verified stabilizer chains.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::chain::StabChain;
use crate::error::PermError;
use crate::perm::Perm;
use crate::rng::RandomStream;

/// Hard cap for full element enumeration.
pub const MAX_ENUMERATION: u64 = 1_000_000;

pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
    order: BigUint,
}

impl PermGroup {
    /// Builds a group from generators with full deterministic verification.
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<PermGroup, PermError> {
        let generators = pad_all(degree, generators)?;
        let chain = StabChain::build(degree, &generators, None, &[]);
        let order = chain.order();
        Ok(PermGroup {
            degree,
            generators,
            chain,
            order,
        })
    }

    /// Builds a group whose order is known exactly in advance.  `order` must
    /// be an upper bound for the generated group; construction stops as soon
    /// as the chain attains it and fails if full verification falls short.
    /// `seeds` must be members; they pre-populate deep levels of the chain.
    pub fn from_generators_with_order(
        degree: usize,
        generators: Vec<Perm>,
        order: BigUint,
        seeds: &[Perm],
    ) -> Result<PermGroup, PermError> {
        let generators = pad_all(degree, generators)?;
        let chain = StabChain::build(degree, &generators, Some(&order), seeds);
        let found = chain.order();
        if found != order {
            return Err(PermError::OrderMismatch(format!(
                "expected order {order}, generators produce {found}"
            )));
        }
        Ok(PermGroup {
            degree,
            generators,
            chain,
            order,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: StabChain::build(degree, &[], None, &[]),
            order: BigUint::from(1u32),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn random_element(&self, rng: &mut RandomStream) -> Perm {
        self.chain.random_element(rng)
    }

    /// True iff the given elements generate a group of the same order.  This
    /// is conjugation invariant: it does not require the elements to live in
    /// this very copy of the group, only to generate an equally large one.
    pub fn generates(&self, elems: &[Perm]) -> bool {
        if elems.iter().any(|g| g.degree() != self.degree) {
            return false;
        }
        let members = elems.iter().all(|g| self.contains(g));
        let chain = if members {
            // Members can never generate more, so the order is a valid bound.
            StabChain::build(self.degree, elems, Some(&self.order), &[])
        } else {
            StabChain::build(self.degree, elems, None, &[])
        };
        chain.order() == self.order
    }

    /// Every group element, enumerated deterministically via the chain.
    /// Guarded by `MAX_ENUMERATION`.
    pub fn elements(&self) -> Result<Vec<Perm>, PermError> {
        let n = self
            .order
            .to_u64()
            .filter(|&n| n <= MAX_ENUMERATION)
            .ok_or(PermError::Overflow("group too large to enumerate"))?;
        let mut elems = vec![Perm::identity(self.degree)];
        for i in (0..self.chain.num_levels()).rev() {
            let orbit: Vec<u32> = self.chain.level_orbit(i).to_vec();
            let mut next = Vec::with_capacity(elems.len() * orbit.len());
            for e in &elems {
                for &p in &orbit {
                    next.push(e * &self.chain.level_transversal(i, p));
                }
            }
            elems = next;
        }
        debug_assert_eq!(elems.len() as u64, n);
        Ok(elems)
    }
}

fn pad_all(degree: usize, gens: Vec<Perm>) -> Result<Vec<Perm>, PermError> {
    gens.into_iter().map(|g| g.pad(degree)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_all(strs: &[&str], degree: usize) -> Vec<Perm> {
        strs.iter()
            .map(|s| Perm::parse(s, degree).unwrap())
            .collect()
    }

    #[test]
    fn a5_order_and_membership() {
        let g = PermGroup::from_generators(5, parse_all(&["(1,2,3)", "(1,2,3,4,5)"], 5)).unwrap();
        assert_eq!(g.order_u64(), Some(60));
        assert!(g.contains(&Perm::parse("(1,2)(3,4)", 5).unwrap()));
        assert!(!g.contains(&Perm::parse("(1,2)", 5).unwrap()));
    }

    #[test]
    fn known_order_accepts_exact_and_rejects_low_generators() {
        let gens = parse_all(&["(1,2)", "(1,2,3,4)"], 4);
        let g =
            PermGroup::from_generators_with_order(4, gens.clone(), BigUint::from(24u32), &[])
                .unwrap();
        assert_eq!(g.order_u64(), Some(24));
        let sub = parse_all(&["(1,2,3)"], 4);
        assert!(
            PermGroup::from_generators_with_order(4, sub, BigUint::from(24u32), &[]).is_err()
        );
    }

    #[test]
    fn generates_is_conjugation_invariant() {
        let g =
            PermGroup::from_generators(7, parse_all(&["(1,2,3)", "(1,2,3,4,5,6,7)"], 7)).unwrap();
        assert_eq!(g.order_u64(), Some(2520));
        // A conjugate generating pair, not sifted against g's own chain.
        let t = Perm::parse("(1,7)(2,5)", 7).unwrap();
        let conj: Vec<Perm> = g
            .generators()
            .iter()
            .map(|x| x.conjugate_by(&t))
            .collect();
        assert!(g.generates(&conj));
        assert!(!g.generates(&parse_all(&["(1,2,3)"], 7)));
    }

    #[test]
    fn elements_enumerates_whole_group() {
        let g = PermGroup::from_generators(4, parse_all(&["(1,2)", "(1,2,3,4)"], 4)).unwrap();
        let mut elems = g.elements().unwrap();
        assert_eq!(elems.len(), 24);
        elems.sort();
        elems.dedup();
        assert_eq!(elems.len(), 24);
        assert!(elems.iter().all(|e| g.contains(e)));
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(5);
        assert_eq!(g.order_u64(), Some(1));
        assert_eq!(g.elements().unwrap(), vec![Perm::identity(5)]);
    }
}
