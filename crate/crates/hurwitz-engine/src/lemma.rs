//! Verification that the dimension-3 linear and unitary groups act on a
//! surface with a single branch point of order alpha.
//!
//! For G = PSL(3,q) (epsilon = +1) or PSU(3,q) (epsilon = -1) and
//! d = gcd(3, q - epsilon), the designated branching order is
//! alpha = (q^2 + epsilon*q + 1)/d, realized by a Singer-type cyclic
//! subgroup; beta = (q^2 - 1)/d is the other distinguished maximal torus
//! order and is reported alongside.  The witness is a commutator relation
//! [a,b] * c = 1 with o(c) = alpha, found by random sampling, so no class
//! enumeration is needed and the whole supported q range runs uniformly.

use perm_core::RandomStream;

use crate::datum::Datum;
use crate::error::EngineError;
use crate::search::{search_witness, Outcome, Strategy};
use crate::tuple::Witness;

/// Smallest supported field size.
pub const MIN_Q: u32 = 3;
/// Largest supported field size.
pub const MAX_Q: u32 = 9;

#[derive(Clone, Debug)]
pub struct Psl3Report {
    pub q: u32,
    pub epsilon: i32,
    pub group_name: String,
    pub alpha: u64,
    pub beta: u64,
    pub datum: Datum,
    pub witness: Witness,
}

/// Finds a one-branch-point, cogenus-1 witness for PSL(3,q) or PSU(3,q).
/// Errors if q is not a prime power in [MIN_Q, MAX_Q], if epsilon is not
/// +1 or -1, or if the budget runs out before a witness appears.
pub fn verify_psl3_lemma(
    q: u32,
    epsilon: i32,
    rng: &mut RandomStream,
    budget: u64,
) -> Result<Psl3Report, EngineError> {
    if !(epsilon == 1 || epsilon == -1) {
        return Err(EngineError::Datum(format!(
            "epsilon must be +1 or -1, got {epsilon}"
        )));
    }
    if !(MIN_Q..=MAX_Q).contains(&q) || !is_prime_power(q) {
        return Err(EngineError::Datum(format!(
            "q must be a prime power in {MIN_Q}..={MAX_Q}, got {q}"
        )));
    }
    let group_name = if epsilon == 1 {
        format!("L3({q})")
    } else {
        format!("U3({q})")
    };
    let q = u64::from(q);
    let d = gcd3(if epsilon == 1 { q - 1 } else { q + 1 });
    let numerator = if epsilon == 1 {
        q * q + q + 1
    } else {
        q * q - q + 1
    };
    debug_assert_eq!(numerator % d, 0);
    let alpha = numerator / d;
    let beta = (q * q - 1) / d;

    let atlas = group_atlas::lookup(&group_name)?;
    debug_assert_eq!(atlas.fixity3_order, Some(alpha));
    match search_witness(
        &atlas.group,
        &group_name,
        1,
        &[(alpha, 1)],
        Strategy::RandomCommutator,
        rng,
        budget,
    )? {
        Outcome::Found(witness) => Ok(Psl3Report {
            q: q as u32,
            epsilon,
            group_name,
            alpha,
            beta,
            datum: witness.datum.clone(),
            witness,
        }),
        Outcome::NotFound => Err(EngineError::Search(format!(
            "budget exhausted searching {group_name} for a branch of order {alpha}"
        ))),
        Outcome::Impossible(why) => Err(EngineError::Search(format!(
            "unexpected impossibility for {group_name}: {why}"
        ))),
    }
}

fn gcd3(n: u64) -> u64 {
    if n % 3 == 0 {
        3
    } else {
        1
    }
}

fn is_prime_power(n: u32) -> bool {
    let mut n = n;
    for p in 2..=n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            return n == 1;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::DEFAULT_BUDGET;
    use crate::tuple::validate;

    #[test]
    fn linear_case_q4() {
        let mut rng = RandomStream::new(51);
        let r = verify_psl3_lemma(4, 1, &mut rng, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.alpha, r.beta), (7, 5));
        assert_eq!(r.group_name, "L3(4)");
        assert_eq!(r.datum.cogenus, 1);
        let g = group_atlas::lookup("L3(4)").unwrap().group;
        validate(&g, &r.witness).unwrap();
    }

    #[test]
    fn unitary_case_q3() {
        let mut rng = RandomStream::new(52);
        let r = verify_psl3_lemma(3, -1, &mut rng, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.alpha, r.beta), (7, 8));
        assert_eq!(r.group_name, "U3(3)");
    }

    #[test]
    fn linear_case_q3_has_trivial_gcd() {
        let mut rng = RandomStream::new(53);
        let r = verify_psl3_lemma(3, 1, &mut rng, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.alpha, r.beta), (13, 8));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let mut rng = RandomStream::new(54);
        assert!(verify_psl3_lemma(6, 1, &mut rng, 10).is_err());
        assert!(verify_psl3_lemma(2, 1, &mut rng, 10).is_err());
        assert!(verify_psl3_lemma(16, 1, &mut rng, 10).is_err());
        assert!(verify_psl3_lemma(4, 0, &mut rng, 10).is_err());
    }
}
