//! Witness search: four strategies, structural impossibility rules, and
//! cogenus reduction.  Every returned witness is re-validated before it
//! leaves this module.

use std::fmt;
use std::str::FromStr;

use class_char::ConjOrbit;
use perm_core::{Perm, PermGroup, RandomStream};

use crate::datum::{normalize_branches, Datum};
use crate::error::EngineError;
use crate::tuple::{validate, Witness};

/// Relation attempts per search unless the caller overrides.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
/// Draws when sampling a single element of prescribed order.
const ORDER_SAMPLING_BUDGET: u64 = 10_000;
/// Largest group the exhaustive strategy will enumerate.
pub const MAX_EXHAUSTIVE_ORDER: u64 = 10_000;
/// Work cap for the exhaustive scan (free-position combinations).
const MAX_EXHAUSTIVE_WORK: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    RandomProduct,
    Constructive,
    RandomCommutator,
    Exhaustive,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Strategy::Auto => "auto",
            Strategy::RandomProduct => "random-product",
            Strategy::Constructive => "constructive",
            Strategy::RandomCommutator => "random-commutator",
            Strategy::Exhaustive => "exhaustive",
        };
        f.write_str(s)
    }
}

impl FromStr for Strategy {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Strategy, EngineError> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "random-product" => Ok(Strategy::RandomProduct),
            "constructive" => Ok(Strategy::Constructive),
            "random-commutator" => Ok(Strategy::RandomCommutator),
            "exhaustive" => Ok(Strategy::Exhaustive),
            other => Err(EngineError::Search(format!("unknown strategy {other:?}"))),
        }
    }
}

/// Search result.  `Impossible` carries a proof sketch (a structural rule or
/// a completed exhaustive scan); `NotFound` is an exhausted budget and says
/// nothing about existence.
#[derive(Debug)]
pub enum Outcome {
    Found(Witness),
    Impossible(String),
    NotFound,
}

/// Searches for a witness for `[name, solve_genus(..), cogenus | branches]`.
///
/// Structural impossibility (cogenus 0 with one branch point, or two branch
/// points of different orders) is decided before the genus is even solved,
/// mirroring the fact that such data never satisfy the tuple relation.
pub fn search_witness(
    g: &PermGroup,
    name: &str,
    cogenus: u32,
    branches: &[(u64, u32)],
    strategy: Strategy,
    rng: &mut RandomStream,
    budget: u64,
) -> Result<Outcome, EngineError> {
    let branches = normalize_branches(branches)?;
    let order = g
        .order_u64()
        .ok_or_else(|| EngineError::Search("group order exceeds u64".into()))?;

    if cogenus == 0 {
        let expanded: Vec<u64> = branches.iter().flat_map(|&(m, n)| vec![m; n as usize]).collect();
        if expanded.len() == 1 {
            return Ok(Outcome::Impossible(format!(
                "a single element of order {} cannot have product 1",
                expanded[0]
            )));
        }
        if expanded.len() == 2 && expanded[0] != expanded[1] {
            return Ok(Outcome::Impossible(format!(
                "xy = 1 forces o(x) = o(y), but the datum asks for orders {} and {}",
                expanded[0], expanded[1]
            )));
        }
    }

    let datum = Datum::solved(name, order, cogenus, &branches)?;
    let r = datum.num_branch_points();

    let outcome = match (strategy, cogenus) {
        (Strategy::Auto, 0) => random_product(g, &datum, rng, budget)?,
        (Strategy::Auto, 1) if r == 1 => random_commutator(g, &datum, rng, budget)?,
        (Strategy::Auto, 1) => constructive(g, &datum, None, rng, budget)?,
        (Strategy::Auto, _) => reduced_cogenus_search(g, &datum, rng, budget)?,
        (Strategy::RandomProduct, 0) => random_product(g, &datum, rng, budget)?,
        (Strategy::RandomCommutator, 1) if r == 1 => random_commutator(g, &datum, rng, budget)?,
        (Strategy::Constructive, 1) => constructive(g, &datum, None, rng, budget)?,
        (Strategy::Exhaustive, 0) => exhaustive(g, &datum, rng)?,
        (s, _) => {
            return Err(EngineError::Search(format!(
                "strategy {s} does not apply to cogenus {cogenus} with {r} branch points"
            )))
        }
    };

    if let Outcome::Found(w) = &outcome {
        validate(g, w)?;
    }
    Ok(outcome)
}

/// Like `search_witness` with an explicit auxiliary class order for the
/// constructive strategy.
pub fn search_constructive(
    g: &PermGroup,
    name: &str,
    branches: &[(u64, u32)],
    aux_order: u64,
    rng: &mut RandomStream,
    budget: u64,
) -> Result<Outcome, EngineError> {
    let branches = normalize_branches(branches)?;
    let order = g
        .order_u64()
        .ok_or_else(|| EngineError::Search("group order exceeds u64".into()))?;
    let datum = Datum::solved(name, order, 1, &branches)?;
    let outcome = constructive(g, &datum, Some(aux_order), rng, budget)?;
    if let Outcome::Found(w) = &outcome {
        validate(g, w)?;
    }
    Ok(outcome)
}

/// Draws a uniform element whose order is a multiple of m and powers it down.
pub(crate) fn random_of_order(
    g: &PermGroup,
    m: u64,
    rng: &mut RandomStream,
) -> Result<Perm, EngineError> {
    for _ in 0..ORDER_SAMPLING_BUDGET {
        let x = g.random_element(rng);
        let o = x.order();
        if o % m == 0 {
            return Ok(x.pow(o / m));
        }
    }
    Err(EngineError::Search(format!(
        "no element of order {m} found in {ORDER_SAMPLING_BUDGET} draws"
    )))
}

/// Cogenus 0: draw all but the last branch element, force the last to be the
/// inverse of the partial product, accept on exact order and generation.
fn random_product(
    g: &PermGroup,
    datum: &Datum,
    rng: &mut RandomStream,
    budget: u64,
) -> Result<Outcome, EngineError> {
    let orders = datum.expanded_orders();
    let (last_order, free) = orders.split_last().expect("structural rules keep r >= 3");
    for _ in 0..budget {
        let mut cs: Vec<Perm> = Vec::with_capacity(orders.len());
        let mut prod = Perm::identity(g.degree());
        for &m in free {
            let c = random_of_order(g, m, rng)?;
            prod = &prod * &c;
            cs.push(c);
        }
        let last = prod.inverse();
        if last.order() != *last_order {
            continue;
        }
        cs.push(last);
        if g.generates(&cs) {
            return Ok(Outcome::Found(Witness {
                datum: datum.clone(),
                handles: Vec::new(),
                branch_elems: cs,
            }));
        }
    }
    Ok(Outcome::NotFound)
}

/// Cogenus 1 with a single branch point: draw (a, b) until the commutator
/// has the branch order, then c := [a,b]^{-1} closes the relation.  Works
/// without any class enumeration, so it scales to the largest atlas groups.
fn random_commutator(
    g: &PermGroup,
    datum: &Datum,
    rng: &mut RandomStream,
    budget: u64,
) -> Result<Outcome, EngineError> {
    let m = datum.expanded_orders()[0];
    for _ in 0..budget {
        let a = g.random_element(rng);
        let b = g.random_element(rng);
        let k = Perm::commutator(&a, &b);
        if k.order() != m {
            continue;
        }
        // c lies in <a, b>, so the pair alone must generate.
        if g.generates(&[a.clone(), b.clone()]) {
            let c = k.inverse();
            return Ok(Outcome::Found(Witness {
                datum: datum.clone(),
                handles: vec![(a, b)],
                branch_elems: vec![c],
            }));
        }
    }
    Ok(Outcome::NotFound)
}

/// Cogenus 1, any number of branch points: draw the c's, set t := (prod c)^{-1},
/// then look inside an enumerated class K of auxiliary order for a with a*t
/// in K.  The conjugator b with a^b = a*t closes [a,b] * prod c = 1 exactly,
/// so only generation remains to be tested.
fn constructive(
    g: &PermGroup,
    datum: &Datum,
    aux_order: Option<u64>,
    rng: &mut RandomStream,
    budget: u64,
) -> Result<Outcome, EngineError> {
    let orders = datum.expanded_orders();
    let aux_candidates = match aux_order {
        Some(k) => vec![k],
        None => default_aux_orders(g, datum, rng),
    };
    let share = (budget / aux_candidates.len().max(1) as u64).max(1);
    for k in aux_candidates {
        let Ok(a0) = random_of_order(g, k, rng) else {
            continue;
        };
        let orbit = match ConjOrbit::enumerate(g, &a0, rng) {
            Ok(orbit) => orbit,
            // Non-enumerable classes rule this candidate out, nothing more.
            Err(class_char::ClassError::ClassTooLarge(_)) => continue,
            Err(e) => return Err(e.into()),
        };
        // Hit rate per sampled slot is |K| / |G|, so this many slots per
        // c-draw yields plenty of hits whenever the class is compatible.
        let slots_per_draw = (orbit.len() as u64).clamp(64, 8_192);
        let mut spent: u64 = 0;
        while spent < share {
            let cs: Vec<Perm> = orders
                .iter()
                .map(|&m| random_of_order(g, m, rng))
                .collect::<Result<_, _>>()?;
            let mut prod = Perm::identity(g.degree());
            for c in &cs {
                prod = &prod * c;
            }
            let t = prod.inverse();
            if t.is_identity() {
                continue;
            }
            let mut generation_tries = 0;
            for _ in 0..slots_per_draw {
                spent += 1;
                if spent >= share {
                    break;
                }
                let slot = rng.below(orbit.len() as u64) as usize;
                let a = orbit.element(slot);
                let h = &a * &t;
                let Some(hs) = orbit.index_of(&h) else {
                    continue;
                };
                let b = &orbit.conjugator_to(slot).inverse() * &orbit.conjugator_to(hs);
                assert_eq!(a.conjugate_by(&b), h, "fingerprint collision");
                let mut elems = vec![a.clone(), b.clone()];
                elems.extend(cs.iter().cloned());
                if g.generates(&elems) {
                    return Ok(Outcome::Found(Witness {
                        datum: datum.clone(),
                        handles: vec![(a, b)],
                        branch_elems: cs,
                    }));
                }
                generation_tries += 1;
                if generation_tries > 50 {
                    break;
                }
            }
        }
    }
    Ok(Outcome::NotFound)
}

/// Auxiliary class orders to try, most frequent element order first.  The
/// empirical per-group defaults (15 for A8, 11 for M22, 9 for U4(3), 5 for
/// L4(3), 13 for L4(5)) are tried before the sampled fallback.
fn default_aux_orders(g: &PermGroup, datum: &Datum, rng: &mut RandomStream) -> Vec<u64> {
    let preset = match (g.order_u64(), datum.expanded_orders().as_slice()) {
        (Some(20_160), [7]) => Some(15),
        (Some(443_520), [7]) => Some(11),
        (Some(3_265_920), [7]) => Some(9),
        (Some(6_065_280), [13]) => Some(5),
        (Some(7_254_000_000), [31]) => Some(13),
        _ => None,
    };
    let mut seen: Vec<(u64, u32)> = Vec::new();
    for _ in 0..200 {
        let o = g.random_element(rng).order();
        if o == 1 {
            continue;
        }
        match seen.iter_mut().find(|(v, _)| *v == o) {
            Some((_, n)) => *n += 1,
            None => seen.push((o, 1)),
        }
    }
    seen.sort_by_key(|&(o, n)| (std::cmp::Reverse(n), o));
    let mut out: Vec<u64> = Vec::new();
    if let Some(k) = preset {
        out.push(k);
    }
    for (o, _) in seen {
        if !out.contains(&o) {
            out.push(o);
        }
    }
    out.truncate(6);
    out
}

/// Cogenus 0 certification for small groups: the first branch element runs
/// over class representatives only (any solution conjugates to one of this
/// form), the middle ones over all elements of their order, and the last is
/// forced.  A completed scan with no hit is a proof of impossibility.
fn exhaustive(g: &PermGroup, datum: &Datum, rng: &mut RandomStream) -> Result<Outcome, EngineError> {
    let order = g.order_u64().expect("checked by caller");
    if order > MAX_EXHAUSTIVE_ORDER {
        return Err(EngineError::Search(format!(
            "exhaustive strategy caps at order {MAX_EXHAUSTIVE_ORDER}, group has {order}"
        )));
    }
    let orders = datum.expanded_orders();
    let elems = g.elements()?;
    let bucket = |m: u64| -> Vec<&Perm> { elems.iter().filter(|e| e.order() == m).collect() };

    // Class representatives of the first order.
    let mut rep_orbits: Vec<ConjOrbit> = Vec::new();
    for x in bucket(orders[0]) {
        if !rep_orbits.iter().any(|o| o.contains(x)) {
            rep_orbits.push(ConjOrbit::enumerate(g, x, rng)?);
        }
    }
    let reps: Vec<Perm> = rep_orbits.iter().map(|o| o.base().clone()).collect();

    let free: Vec<Vec<&Perm>> = orders[1..orders.len() - 1]
        .iter()
        .map(|&m| bucket(m))
        .collect();
    let work = free
        .iter()
        .fold(reps.len() as u64, |acc, b| acc.saturating_mul(b.len() as u64));
    if work > MAX_EXHAUSTIVE_WORK {
        return Err(EngineError::Search(format!(
            "exhaustive scan needs {work} combinations, cap is {MAX_EXHAUSTIVE_WORK}"
        )));
    }

    let last_order = *orders.last().expect("r >= 3");
    let mut stack: Vec<Perm> = Vec::with_capacity(orders.len());
    for rep in &reps {
        stack.push(rep.clone());
        if let Some(w) = scan(g, datum, &free, 0, &mut stack, rep.clone(), last_order) {
            return Ok(Outcome::Found(w));
        }
        stack.pop();
    }
    Ok(Outcome::Impossible(format!(
        "exhaustive scan over {work} combinations found no generating tuple"
    )))
}

fn scan(
    g: &PermGroup,
    datum: &Datum,
    free: &[Vec<&Perm>],
    depth: usize,
    stack: &mut Vec<Perm>,
    prod: Perm,
    last_order: u64,
) -> Option<Witness> {
    if depth == free.len() {
        let last = prod.inverse();
        if last.order() != last_order {
            return None;
        }
        stack.push(last);
        let found = g.generates(stack);
        let witness = found.then(|| Witness {
            datum: datum.clone(),
            handles: Vec::new(),
            branch_elems: stack.clone(),
        });
        stack.pop();
        return witness;
    }
    for &x in &free[depth] {
        stack.push(x.clone());
        let next = &prod * x;
        if let Some(w) = scan(g, datum, free, depth + 1, stack, next, last_order) {
            return Some(w);
        }
        stack.pop();
    }
    None
}

/// Cogenus >= 2: find a witness at the smallest feasible cogenus and pad
/// with identity handle pairs.  With no branch points at all, any generating
/// pair (x, y) yields the valid cogenus-2 tuple (x, y, y, x) since
/// [x,y][y,x] = 1.
fn reduced_cogenus_search(
    g: &PermGroup,
    datum: &Datum,
    rng: &mut RandomStream,
    budget: u64,
) -> Result<Outcome, EngineError> {
    let order = g.order_u64().expect("checked by caller");
    if datum.branches.is_empty() {
        for _ in 0..budget.min(10_000) {
            let x = g.random_element(rng);
            let y = g.random_element(rng);
            if g.generates(&[x.clone(), y.clone()]) {
                let base = Witness {
                    datum: Datum::solved(&datum.name, order, 2, &[])?,
                    handles: vec![(x.clone(), y.clone()), (y, x)],
                    branch_elems: Vec::new(),
                };
                let w = base.extend_cogenus(order, datum.cogenus - 2)?;
                return Ok(Outcome::Found(w));
            }
        }
        return Ok(Outcome::NotFound);
    }
    for base_cogenus in [0u32, 1] {
        let feasible = Datum::solved(&datum.name, order, base_cogenus, &datum.branches).is_ok();
        if !feasible {
            continue;
        }
        match search_witness(
            g,
            &datum.name,
            base_cogenus,
            &datum.branches,
            Strategy::Auto,
            rng,
            budget,
        )? {
            Outcome::Found(w) => {
                let ext = w.extend_cogenus(order, datum.cogenus - base_cogenus)?;
                return Ok(Outcome::Found(ext));
            }
            Outcome::Impossible(_) | Outcome::NotFound => continue,
        }
    }
    Ok(Outcome::NotFound)
}
