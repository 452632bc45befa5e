//! Exact counts from the character table: solutions of x_1 ... x_r = 1 with
//! each x_i constrained to a conjugacy class, and of [a, b] = g.
//!
//! Both counts are character sums that are known a priori to be rational
//! integers.  The sums are formed exactly in Z[zeta_e], the integer is
//! recovered by Chinese remaindering over evaluation primes, and the result
//! is certified by an algebraic zero test before any division happens.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::{is_prime, root_of_order, CycInt, Reducer};
use crate::dixon::CharacterTable;
use crate::error::ClassError;

/// Number of tuples (x_1, ..., x_r) with x_i in the i-th listed class and
/// x_1 x_2 ... x_r = 1, via (prod n_i / |G|) sum_chi prod_i chi(C_i) / d^(r-2).
pub fn frobenius_count(table: &CharacterTable, tuple: &[usize]) -> Result<BigInt, ClassError> {
    assert!(!tuple.is_empty());
    let e = table.exponent();
    let k = table.num_classes();
    let r = tuple.len();

    // Clear denominators: weight_chi = D / d^(r-2) with D = lcm_chi d^(r-2);
    // for r < 2 the exponent is negative and the weight is just d^(2-r).
    let (d_cap, weights): (BigInt, Vec<BigInt>) = if r >= 2 {
        let powers: Vec<BigInt> = table
            .degrees()
            .iter()
            .map(|&d| BigInt::from(d).pow(r as u32 - 2))
            .collect();
        let d_cap = powers.iter().fold(BigInt::one(), |acc, p| acc.lcm(p));
        let weights = powers.iter().map(|p| &d_cap / p).collect();
        (d_cap, weights)
    } else {
        let weights = table
            .degrees()
            .iter()
            .map(|&d| BigInt::from(d).pow(2 - r as u32))
            .collect();
        (BigInt::one(), weights)
    };

    let mut s = CycInt::zero(e);
    for a in 0..k {
        let mut prod = CycInt::one(e);
        for &c in tuple {
            prod = prod.mul(table.value(a, c));
        }
        let w = weights[a].to_i64().expect("weight fits i64");
        s = s.add(&prod.scale(w));
    }

    // |S| <= sum_chi (D/d^(r-2)) d^r = D sum d^2 = D |G|.
    let bound = &d_cap * BigInt::from(table.group_order());
    let c = certified_integer(&s, &bound)?;

    let mut num = c;
    for &t in tuple {
        num *= BigInt::from(table.class_sizes()[t]);
    }
    let den = BigInt::from(table.group_order()) * &d_cap;
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() || q.is_negative() {
        return Err(ClassError::Character(format!(
            "count is not a nonnegative integer: {num} / {den}"
        )));
    }
    Ok(q)
}

/// Number of pairs (a, b) with [a, b] equal to one fixed element of class j:
/// |G| sum_chi chi(g_j) / d.
pub fn commutator_solution_count(
    table: &CharacterTable,
    class: usize,
) -> Result<BigInt, ClassError> {
    let e = table.exponent();
    let degrees: Vec<BigInt> = table.degrees().iter().map(|&d| BigInt::from(d)).collect();
    let d_cap = degrees.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
    let mut s = CycInt::zero(e);
    for a in 0..table.num_classes() {
        let w = (&d_cap / &degrees[a]).to_i64().expect("weight fits i64");
        s = s.add(&table.value(a, class).scale(w));
    }
    // |S| <= sum_chi (D/d) d = k D.
    let bound = &d_cap * BigInt::from(table.num_classes() as u64);
    let c = certified_integer(&s, &bound)?;
    let num = BigInt::from(table.group_order()) * c;
    let (q, rem) = num.div_rem(&d_cap);
    if !rem.is_zero() || q.is_negative() {
        return Err(ClassError::Character(format!(
            "count is not a nonnegative integer: {num} / {d_cap}"
        )));
    }
    Ok(q)
}

/// Recovers the rational integer a cyclotomic sum is known to equal, and
/// proves it: CRT over primes l = 1 mod e until the modulus exceeds twice
/// the bound, then an exact zero test of s - c in Z[zeta_e].
fn certified_integer(s: &CycInt, bound: &BigInt) -> Result<BigInt, ClassError> {
    let e = s.conductor() as u64;
    let mut modulus = BigInt::one();
    let mut x = BigInt::zero();
    let mut l = e + 1;
    let target = BigInt::from(2) * bound + 1;
    while modulus < target {
        while !is_prime(l) {
            l += e;
        }
        let w = root_of_order(e, l)
            .ok_or_else(|| ClassError::Character("no evaluation root".into()))?;
        let sl = BigInt::from(s.eval_mod(l, w));
        // x' = x mod modulus, x' = sl mod l.
        let lb = BigInt::from(l);
        let gcd = modulus.extended_gcd(&lb);
        assert!(gcd.gcd.is_one());
        let t = ((&sl - &x) * gcd.x).mod_floor(&lb);
        x += &modulus * t;
        modulus *= &lb;
        x = x.mod_floor(&modulus);
        l += e;
    }
    let mut c = x;
    if &c * 2 > modulus {
        c -= &modulus;
    }
    if c.abs() > *bound {
        return Err(ClassError::Character(format!(
            "recovered value {c} exceeds its bound {bound}"
        )));
    }
    let ci = c.to_i64().ok_or_else(|| {
        ClassError::Character("recovered value does not fit a machine integer".into())
    })?;
    let red = Reducer::new(s.conductor());
    if !red.is_int(s, ci) {
        return Err(ClassError::Character(
            "character sum is not the recovered rational integer".into(),
        ));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::Classes;
    use crate::dixon::character_table;
    use perm_core::{Perm, PermGroup, RandomStream};

    fn s3_table() -> CharacterTable {
        let gens = vec![
            Perm::parse("(1,2)", 3).unwrap(),
            Perm::parse("(1,2,3)", 3).unwrap(),
        ];
        let g = PermGroup::from_generators(3, gens).unwrap();
        let classes = Classes::build(&g, &mut RandomStream::new(21)).unwrap();
        character_table(&g, &classes).unwrap()
    }

    #[test]
    fn hand_checked_counts_in_s3() {
        let t = s3_table();
        // Classes sorted: 0 = identity, 1 = transpositions, 2 = 3-cycles.
        // Two transpositions multiply to 1 iff equal: 3 solutions.
        assert_eq!(frobenius_count(&t, &[1, 1]).unwrap(), BigInt::from(3));
        // A product of two transpositions is never a transposition.
        assert_eq!(frobenius_count(&t, &[1, 1, 1]).unwrap(), BigInt::from(0));
        // x y z = 1 with x, y transpositions, z a 3-cycle: x != y, and then
        // z is forced: 3 * 2 = 6.
        assert_eq!(frobenius_count(&t, &[1, 1, 2]).unwrap(), BigInt::from(6));
        // Commutators: 18 pairs commute; the rest split evenly over the two
        // 3-cycles, 9 pairs each.
        assert_eq!(commutator_solution_count(&t, 0).unwrap(), BigInt::from(18));
        assert_eq!(commutator_solution_count(&t, 2).unwrap(), BigInt::from(9));
        // No commutator is a transposition (derived subgroup is A3).
        assert_eq!(commutator_solution_count(&t, 1).unwrap(), BigInt::from(0));
    }

    #[test]
    fn single_class_counts() {
        let t = s3_table();
        assert_eq!(frobenius_count(&t, &[0]).unwrap(), BigInt::from(1));
        assert_eq!(frobenius_count(&t, &[1]).unwrap(), BigInt::from(0));
        assert_eq!(frobenius_count(&t, &[0, 0, 0]).unwrap(), BigInt::from(1));
    }
}
