//! Stabilizer chains via deterministic Schreier-Sims.
//!
//! Base points are chosen as smallest moved points.  A chain is trusted only
//! after every Schreier generator sifts to the identity, or after the product
//! of orbit sizes reaches a caller-supplied exact upper bound for the group
//! order (the product can never exceed the true order, so attaining the bound
//! proves completeness).  Construction is fully deterministic given the
//! generator list, so repeated runs produce identical chains.

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Perm;
use crate::rng::RandomStream;

const NO_POS: u32 = u32::MAX;

struct Level {
    base: u32,
    gens: Vec<Perm>,
    gen_invs: Vec<Perm>,
    orbit: Vec<u32>,
    /// point -> orbit slot, NO_POS if outside the orbit.
    pos: Vec<u32>,
    /// per orbit slot: (parent point, generator index); slot 0 is the root.
    sv: Vec<(u32, u32)>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Level {
        let mut pos = vec![NO_POS; degree];
        pos[base as usize] = 0;
        Level {
            base,
            gens: Vec::new(),
            gen_invs: Vec::new(),
            orbit: vec![base],
            pos,
            sv: vec![(base, NO_POS)],
        }
    }

    fn add_gen(&mut self, g: &Perm) {
        self.gens.push(g.clone());
        self.gen_invs.push(g.inverse());
        self.close_orbit(0);
    }

    /// Extends the orbit by BFS starting from slot `from`.
    fn close_orbit(&mut self, from: usize) {
        let mut i = from;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for (gi, gen) in self.gens.iter().enumerate() {
                let q = gen.apply(p);
                if self.pos[q as usize] == NO_POS {
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    self.sv.push((p, gi as u32));
                }
            }
            i += 1;
        }
    }

    /// Generator-index path from the base to `p` along the Schreier tree.
    fn path_to(&self, p: u32) -> Vec<u32> {
        let mut path = Vec::new();
        let mut cur = p;
        while cur != self.base {
            let (prev, gi) = self.sv[self.pos[cur as usize] as usize];
            path.push(gi);
            cur = prev;
        }
        path.reverse();
        path
    }

    /// Transversal element u with base^u = p.
    fn transversal(&self, p: u32, degree: usize) -> Perm {
        let mut u = Perm::identity(degree);
        for gi in self.path_to(p) {
            u = &u * &self.gens[gi as usize];
        }
        u
    }

    /// Inverse transversal element, i.e. u^-1 with p^(u^-1) = base.
    fn transversal_inv(&self, p: u32, degree: usize) -> Perm {
        let mut u = Perm::identity(degree);
        for gi in self.path_to(p).into_iter().rev() {
            u = &u * &self.gen_invs[gi as usize];
        }
        u
    }
}

pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds and verifies a chain for `<gens>`.
    ///
    /// `seeds` must lie in `<gens>`; they are planted as extra strong
    /// generators to short-circuit deep levels (used by coset actions, where
    /// the point stabilizer is known in advance).  `order_bound`, if given,
    /// must be an exact upper bound for |<gens>|; reaching it ends
    /// verification early with a complete chain.
    pub fn build(
        degree: usize,
        gens: &[Perm],
        order_bound: Option<&BigUint>,
        seeds: &[Perm],
    ) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens.iter().chain(seeds.iter()) {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() {
                chain.insert_gen(g.clone());
            }
        }
        chain.verify(order_bound);
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> BigUint {
        let mut ord = BigUint::one();
        for level in &self.levels {
            ord *= BigUint::from(level.orbit.len());
        }
        ord
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// Basic orbit of level `i`, in BFS discovery order starting at the base.
    pub fn level_orbit(&self, i: usize) -> &[u32] {
        &self.levels[i].orbit
    }

    /// Transversal element u of level `i` with base^u = p.
    pub fn level_transversal(&self, i: usize, p: u32) -> Perm {
        debug_assert_ne!(self.levels[i].pos[p as usize], NO_POS);
        self.levels[i].transversal(p, self.degree)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && {
            let (_, residue) = self.sift(0, g.clone());
            residue.is_identity()
        }
    }

    /// Sifts `g` through levels `from..`, returning the level reached and the
    /// residue (identity residue at the end means membership).
    pub fn sift(&self, from: usize, g: Perm) -> (usize, Perm) {
        let mut cur = g;
        for i in from..self.levels.len() {
            let level = &self.levels[i];
            let p = cur.apply(level.base);
            if p == level.base {
                continue;
            }
            if level.pos[p as usize] == NO_POS {
                return (i, cur);
            }
            cur = &cur * &level.transversal_inv(p, self.degree);
        }
        (self.levels.len(), cur)
    }

    /// Exactly uniform random element: independently uniform transversal
    /// representative at every level, composed deepest level first.
    pub fn random_element(&self, rng: &mut RandomStream) -> Perm {
        let mut acc = Perm::identity(self.degree);
        for level in self.levels.iter().rev() {
            let slot = rng.below(level.orbit.len() as u64) as usize;
            let t = level.transversal(level.orbit[slot], self.degree);
            acc = &acc * &t;
        }
        acc
    }

    /// Adds a strong generator, creating a level if it fixes all current bases.
    /// Returns the insertion depth (number of leading bases it fixes).
    fn insert_gen(&mut self, g: Perm) -> usize {
        debug_assert!(!g.is_identity());
        let mut d = 0;
        while d < self.levels.len() && g.apply(self.levels[d].base) == self.levels[d].base {
            d += 1;
        }
        if d == self.levels.len() {
            let base = g.smallest_moved().expect("non-identity");
            self.levels.push(Level::new(base, self.degree));
        }
        for j in 0..=d {
            self.levels[j].add_gen(&g);
        }
        d
    }

    /// Deterministic verification sweep, deepest level first.  Maintains the
    /// smallest index `vb` such that all levels >= vb are verified; planting a
    /// strong generator at depth d invalidates levels <= d.
    fn verify(&mut self, order_bound: Option<&BigUint>) {
        let mut vb = self.levels.len();
        loop {
            if let Some(bound) = order_bound {
                if &self.order() == bound {
                    return;
                }
            }
            if vb == 0 {
                return;
            }
            match self.check_level(vb - 1) {
                None => vb -= 1,
                Some(depth) => vb = depth + 1,
            }
        }
    }

    /// Processes all Schreier generators of one level.  Returns the insertion
    /// depth of a new strong generator, or None if every one sifted.
    fn check_level(&mut self, i: usize) -> Option<usize> {
        let mut slot = 0;
        while slot < self.levels[i].orbit.len() {
            let p = self.levels[i].orbit[slot];
            let u_p = self.levels[i].transversal(p, self.degree);
            let mut gi = 0;
            while gi < self.levels[i].gens.len() {
                let q = self.levels[i].gens[gi].apply(p);
                // Tree edges give trivial Schreier generators by construction.
                let q_slot = self.levels[i].pos[q as usize] as usize;
                if self.levels[i].sv[q_slot] != (p, gi as u32) {
                    let schreier = &(&u_p * &self.levels[i].gens[gi])
                        * &self.levels[i].transversal_inv(q, self.degree);
                    if !schreier.is_identity() {
                        let (_, residue) = self.sift(i + 1, schreier);
                        if !residue.is_identity() {
                            let depth = self.insert_gen(residue);
                            debug_assert!(depth > i);
                            return Some(depth);
                        }
                    }
                }
                gi += 1;
            }
            slot += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_of(strs: &[&str], degree: usize) -> StabChain {
        let gens: Vec<Perm> = strs
            .iter()
            .map(|s| Perm::parse(s, degree).unwrap())
            .collect();
        StabChain::build(degree, &gens, None, &[])
    }

    #[test]
    fn symmetric_group_orders() {
        for (n, expect) in [(3usize, 6u64), (5, 120), (8, 40320)] {
            let mut cycle = String::from("(");
            for i in 1..=n {
                if i > 1 {
                    cycle.push(',');
                }
                cycle.push_str(&i.to_string());
            }
            cycle.push(')');
            let chain = chain_of(&["(1,2)", &cycle], n);
            assert_eq!(chain.order(), BigUint::from(expect));
        }
    }

    #[test]
    fn alternating_and_trivial() {
        let a5 = chain_of(&["(1,2,3)", "(1,2,3,4,5)"], 5);
        assert_eq!(a5.order(), BigUint::from(60u32));
        let trivial = StabChain::build(4, &[], None, &[]);
        assert_eq!(trivial.order(), BigUint::one());
        assert!(trivial.contains(&Perm::identity(4)));
        assert!(!trivial.contains(&Perm::parse("(1,2)", 4).unwrap()));
    }

    #[test]
    fn membership_by_sifting() {
        let a5 = chain_of(&["(1,2,3)", "(1,2,3,4,5)"], 5);
        assert!(a5.contains(&Perm::parse("(1,3,5)", 5).unwrap()));
        assert!(!a5.contains(&Perm::parse("(1,2)", 5).unwrap()));
        let s4 = chain_of(&["(1,2)", "(1,2,3,4)"], 4);
        assert!(s4.contains(&Perm::parse("(1,2)(3,4)", 4).unwrap()));
    }

    #[test]
    fn base_points_are_smallest_moved() {
        let chain = chain_of(&["(3,4,5)", "(3,4)"], 6);
        assert_eq!(chain.order(), BigUint::from(6u32));
        assert_eq!(chain.base()[0], 2); // point 3, 0-based
    }

    #[test]
    fn order_bound_early_exit_is_exact() {
        let gens = ["(1,2)", "(1,2,3,4,5,6,7)"];
        let full = chain_of(&gens, 7);
        assert_eq!(full.order(), BigUint::from(5040u32));
        let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse(s, 7).unwrap()).collect();
        let bounded = StabChain::build(7, &gens, Some(&BigUint::from(5040u32)), &[]);
        assert_eq!(bounded.order(), BigUint::from(5040u32));
        // A bound that is only an upper bound must not be claimed.
        let sub = [Perm::parse("(1,2,3)", 7).unwrap()];
        let hinted = StabChain::build(7, &sub, Some(&BigUint::from(5040u32)), &[]);
        assert_eq!(hinted.order(), BigUint::from(3u32));
    }

    #[test]
    fn random_products_are_members() {
        let gens: Vec<Perm> = ["(1,2,3)", "(2,3,4,5,6,7)"]
            .iter()
            .map(|s| Perm::parse(s, 7).unwrap())
            .collect();
        let chain = StabChain::build(7, &gens, None, &[]);
        let mut rng = RandomStream::new(5);
        for _ in 0..1000 {
            let mut w = Perm::identity(7);
            for _ in 0..6 {
                let pick = rng.below(gens.len() as u64) as usize;
                w = &w * &gens[pick];
            }
            assert!(chain.contains(&w));
        }
    }

    #[test]
    fn uniform_element_is_member_and_deterministic() {
        let gens: Vec<Perm> = ["(1,2,3)", "(1,2,3,4,5)"]
            .iter()
            .map(|s| Perm::parse(s, 5).unwrap())
            .collect();
        let chain = StabChain::build(5, &gens, None, &[]);
        let mut r1 = RandomStream::new(42);
        let mut r2 = RandomStream::new(42);
        for _ in 0..10 {
            let a = chain.random_element(&mut r1);
            let b = chain.random_element(&mut r2);
            assert_eq!(a, b);
            assert!(chain.contains(&a));
        }
    }
}
