//! Conjugacy classes via randomized discovery and closure under conjugation
//! by generators.
//!
//! Elements are tracked by 122-bit fingerprints (two independent polynomial
//! hashes mod 2^61 - 1).  A collision can only shrink an orbit count, and
//! every count is checked against group-theoretic identities (sum of class
//! sizes = |G|, orbit size * centralizer order = |G|), so collisions abort
//! loudly instead of corrupting results.

use std::collections::HashSet;

use indexmap::IndexMap;
use num_integer::Integer;
use num_traits::ToPrimitive;
use perm_core::{Perm, PermGroup, RandomStream};

use crate::error::ClassError;

const M61: u64 = (1 << 61) - 1;
const BASE_A: u64 = 0x1fd3_9a2b_c475_e681 % M61;
const BASE_B: u64 = 0x0b6e_52c1_7f90_d3a5 % M61;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % M61 as u128) as u64
}

pub fn fingerprint(p: &Perm) -> u128 {
    let mut h1 = 0u64;
    let mut h2 = 0u64;
    for &x in p.images() {
        h1 = (mulmod(h1, BASE_A) + x as u64 + 1) % M61;
        h2 = (mulmod(h2, BASE_B) + x as u64 + 1) % M61;
    }
    ((h1 as u128) << 64) | h2 as u128
}

pub struct ClassInfo {
    /// Lexicographically smallest element of the class.
    pub rep: Perm,
    pub size: u64,
    pub element_order: u64,
}

/// The full set of conjugacy classes of a group of order at most 10^6,
/// with O(log |G|) class lookup for arbitrary elements.
pub struct Classes {
    classes: Vec<ClassInfo>,
    /// (fingerprint, class id) for every group element, sorted.
    fp_index: Vec<(u128, u32)>,
    order: u64,
}

pub const MAX_CLASSIFIED_ORDER: u64 = 1_000_000;

impl Classes {
    pub fn build(g: &PermGroup, rng: &mut RandomStream) -> Result<Classes, ClassError> {
        let order = g
            .order_u64()
            .filter(|&n| n <= MAX_CLASSIFIED_ORDER)
            .ok_or(ClassError::GroupTooLarge(
                g.order_u64().unwrap_or(u64::MAX),
                MAX_CLASSIFIED_ORDER,
            ))?;

        let mut seen: HashSet<u128> = HashSet::new();
        let mut found: Vec<(ClassInfo, Vec<u128>)> = Vec::new();
        let mut total = 0u64;
        let mut draws = 0u64;
        while total < order {
            let x = if total == 0 {
                Perm::identity(g.degree())
            } else {
                g.random_element(rng)
            };
            draws += 1;
            if draws > 200 * order.max(64) {
                return Err(ClassError::Budget);
            }
            let fx = fingerprint(&x);
            if seen.contains(&fx) {
                continue;
            }
            seen.insert(fx);
            let mut fps = vec![fx];
            let mut queue = vec![x];
            let mut min_rep = queue[0].clone();
            let mut at = 0;
            while at < queue.len() {
                for s in g.generators() {
                    let z = queue[at].conjugate_by(s);
                    let fz = fingerprint(&z);
                    if seen.insert(fz) {
                        fps.push(fz);
                        if z < min_rep {
                            min_rep = z.clone();
                        }
                        queue.push(z);
                    }
                }
                at += 1;
            }
            total += fps.len() as u64;
            let info = ClassInfo {
                element_order: min_rep.order(),
                size: fps.len() as u64,
                rep: min_rep,
            };
            found.push((info, fps));
        }

        found.sort_by(|a, b| {
            (a.0.element_order, a.0.size, &a.0.rep).cmp(&(b.0.element_order, b.0.size, &b.0.rep))
        });
        let mut classes = Vec::with_capacity(found.len());
        let mut fp_index = Vec::with_capacity(order as usize);
        for (id, (info, fps)) in found.into_iter().enumerate() {
            classes.push(info);
            fp_index.extend(fps.into_iter().map(|fp| (fp, id as u32)));
        }
        fp_index.sort_unstable();
        Ok(Classes {
            classes,
            fp_index,
            order,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn class(&self, i: usize) -> &ClassInfo {
        &self.classes[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &ClassInfo> {
        self.classes.iter()
    }

    /// Class of an arbitrary group element.
    pub fn classify(&self, p: &Perm) -> Option<usize> {
        let fp = fingerprint(p);
        self.fp_index
            .binary_search_by_key(&fp, |&(f, _)| f)
            .ok()
            .map(|i| self.fp_index[i].1 as usize)
    }

    /// Class of the inverses of class i.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.classify(&self.classes[i].rep.inverse())
            .expect("closed under inversion")
    }

    /// Class of the s-th powers of class i.
    pub fn power_class(&self, i: usize, s: u64) -> usize {
        self.classify(&self.classes[i].rep.pow(s))
            .expect("closed under powers")
    }

    /// lcm of the element orders: the group exponent.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&c.element_order))
    }
}

/// A single conjugation orbit tracked by fingerprints, with parent pointers
/// for conjugator recovery and a verified centralizer order.
///
/// Only a bounded prefix of elements is stored; later elements are rebuilt
/// by walking parent pointers down to a cached ancestor.  BFS parents of
/// slot k sit near k / branching, so the walk is logarithmically short.
pub struct ConjOrbit {
    base: Perm,
    /// fingerprint -> (parent slot, generator index); slot 0 is the root.
    slots: IndexMap<u128, (u32, u32)>,
    /// Elements of slots 0..cache.len(), in slot order.
    cache: Vec<Perm>,
    gens: Vec<Perm>,
    pub centralizer_order: u64,
}

pub const MAX_ORBIT: usize = 1 << 22;
const CACHE_BYTES: usize = 64 << 20;

impl ConjOrbit {
    /// Enumerates the conjugacy class of `h` and certifies its size by
    /// finding a centralizer with |orbit| * |centralizer| = |G|.
    pub fn enumerate(
        g: &PermGroup,
        h: &Perm,
        rng: &mut RandomStream,
    ) -> Result<ConjOrbit, ClassError> {
        let order = g
            .order_u64()
            .ok_or(ClassError::GroupTooLarge(u64::MAX, u64::MAX))?;
        let cache_limit = (CACHE_BYTES / (4 * g.degree())).max(1024);
        let mut orbit = ConjOrbit {
            base: h.clone(),
            slots: IndexMap::new(),
            cache: vec![h.clone()],
            gens: g.generators().to_vec(),
            centralizer_order: 0,
        };
        orbit.slots.insert(fingerprint(h), (u32::MAX, u32::MAX));
        let mut at = 0;
        while at < orbit.slots.len() {
            let x = orbit.element(at);
            for gi in 0..orbit.gens.len() {
                let z = x.conjugate_by(&orbit.gens[gi]);
                let fz = fingerprint(&z);
                if !orbit.slots.contains_key(&fz) {
                    if orbit.slots.len() >= MAX_ORBIT {
                        return Err(ClassError::ClassTooLarge(MAX_ORBIT));
                    }
                    orbit.slots.insert(fz, (at as u32, gi as u32));
                    if orbit.cache.len() < cache_limit {
                        orbit.cache.push(z);
                    }
                }
            }
            at += 1;
        }

        // The centralizer grows from <h> by random Schreier generators until
        // orbit size * centralizer order = |G| certifies both counts.
        let mut cent_gens: Vec<Perm> = vec![h.clone()];
        let mut cent = perm_core::StabChain::build(g.degree(), &cent_gens, None, &[]);
        let mut attempts = 0;
        loop {
            let cent_order = cent.order().to_u64().expect("divides the group order");
            let product = orbit.slots.len() as u128 * cent_order as u128;
            if product == order as u128 {
                orbit.centralizer_order = cent_order;
                break;
            }
            assert!(product < order as u128, "centralizer overshoot");
            attempts += 1;
            if attempts > 2000 {
                return Err(ClassError::Budget);
            }
            let slot = rng.below(orbit.slots.len() as u64) as usize;
            let gi = rng.below(orbit.gens.len() as u64) as usize;
            let t_p = orbit.conjugator_to(slot);
            let z = orbit.element(slot).conjugate_by(&orbit.gens[gi]);
            let q = orbit
                .slots
                .get_index_of(&fingerprint(&z))
                .expect("orbit is closed");
            let t_q = orbit.conjugator_to(q);
            let schreier = &(&t_p * &orbit.gens[gi]) * &t_q.inverse();
            debug_assert_eq!(h.conjugate_by(&schreier), *h);
            if !cent.contains(&schreier) {
                cent_gens.push(schreier);
                cent = perm_core::StabChain::build(g.degree(), &cent_gens, None, &[]);
            }
        }
        Ok(orbit)
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn base(&self) -> &Perm {
        &self.base
    }

    /// Membership by fingerprint.  A false positive requires a fingerprint
    /// collision, which the size certificate makes astronomically unlikely.
    pub fn contains(&self, x: &Perm) -> bool {
        self.slots.contains_key(&fingerprint(x))
    }

    pub fn index_of(&self, x: &Perm) -> Option<usize> {
        self.slots.get_index_of(&fingerprint(x))
    }

    /// The element at a slot, rebuilt from the nearest cached ancestor.
    pub fn element(&self, slot: usize) -> Perm {
        let (anc, path) = self.path_to_cached(slot);
        let mut x = self.cache[anc].clone();
        for gi in path {
            x = x.conjugate_by(&self.gens[gi as usize]);
        }
        x
    }

    /// t with base^t = element(slot), composed along the full parent path.
    pub fn conjugator_to(&self, slot: usize) -> Perm {
        let mut path = Vec::new();
        let mut cur = slot;
        while cur != 0 {
            let (parent, gi) = *self.slots.get_index(cur).expect("valid slot").1;
            path.push(gi);
            cur = parent as usize;
        }
        path.reverse();
        let mut t = Perm::identity(self.base.degree());
        for gi in path {
            t = &t * &self.gens[gi as usize];
        }
        t
    }

    /// Walks parent pointers until hitting a cached slot; the returned path
    /// is in application order (ancestor first).
    fn path_to_cached(&self, slot: usize) -> (usize, Vec<u32>) {
        let mut path = Vec::new();
        let mut cur = slot;
        while cur >= self.cache.len() {
            let (parent, gi) = *self.slots.get_index(cur).expect("valid slot").1;
            path.push(gi);
            cur = parent as usize;
        }
        path.reverse();
        (cur, path)
    }
}

/// Finds t with a^t = b, if a and b are conjugate.  Enumerates the orbit of
/// a, so only suitable for bounded classes.
pub fn conjugator(
    g: &PermGroup,
    a: &Perm,
    b: &Perm,
    rng: &mut RandomStream,
) -> Result<Option<Perm>, ClassError> {
    let orbit = ConjOrbit::enumerate(g, a, rng)?;
    match orbit.index_of(b) {
        None => Ok(None),
        Some(slot) => {
            let t = orbit.conjugator_to(slot);
            // Fingerprint lookups can in principle lie; the conjugator cannot.
            assert_eq!(a.conjugate_by(&t), *b, "fingerprint collision");
            Ok(Some(t))
        }
    }
}
