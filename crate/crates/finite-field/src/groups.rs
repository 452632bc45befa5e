//! Projective special linear and unitary groups as validated permutation
//! groups on projective points.
//!
//! Generation is never taken on faith: every construction builds a stabilizer
//! chain whose verified order must equal the closed-form order, so a wrong
//! generator set fails loudly rather than yielding a smaller group.

use num_bigint::BigUint;
use perm_core::{Perm, PermGroup, RandomStream};

use crate::error::FieldError;
use crate::field::Field;
use crate::matrix::Mat;
use crate::projective::ProjSpace;
use crate::unitary;

/// |PSL_n(q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1) / gcd(n, q-1).
pub fn psl_order(n: u32, q: u64) -> BigUint {
    let mut ord = BigUint::from(q).pow(n * (n - 1) / 2);
    for i in 2..=n {
        ord *= BigUint::from(q).pow(i) - 1u32;
    }
    ord / gcd(n as u64, q - 1)
}

/// |PSU_n(q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - (-1)^i) / gcd(n, q+1).
pub fn psu_order(n: u32, q: u64) -> BigUint {
    let mut ord = BigUint::from(q).pow(n * (n - 1) / 2);
    for i in 2..=n {
        let term = BigUint::from(q).pow(i);
        ord *= if i % 2 == 0 { term - 1u32 } else { term + 1u32 };
    }
    ord / gcd(n as u64, q + 1)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Splits a prime power q into (p, f); None if q is not a prime power.
pub fn prime_power(q: u32) -> Option<(u16, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut rest = q;
    let mut f = 0;
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p as u16, f))
}

/// PSL_n(q) acting on the points of PG(n-1, q), n in 2..=4.
///
/// Generators: the elementary transvections I + r^i E_{01} for an F_p-basis
/// {r^i} of GF(q), plus a cyclic basis rotation with determinant fixed to 1.
pub fn psl(n: usize, q: u32) -> Result<PermGroup, FieldError> {
    assert!((2..=4).contains(&n), "only degrees 2..4 are built");
    let (p, f) = prime_power(q).ok_or(FieldError::NotPrime(q as u16))?;
    let field = Field::new(p, f)?;
    let space = ProjSpace::new(&field, n);

    let mut mats: Vec<Mat> = Vec::new();
    for i in 0..f {
        let mut t = Mat::identity(n);
        t.set(0, 1, field.root_pow(i as u64));
        mats.push(t);
    }
    let mut c = Mat::zero(n);
    for i in 0..n - 1 {
        c.set(i, i + 1, 1);
    }
    c.set(n - 1, 0, if n % 2 == 0 { field.neg(1) } else { 1 });
    mats.push(c);

    let gens: Vec<Perm> = mats
        .iter()
        .map(|m| {
            assert_eq!(m.det(&field), 1, "generator must be unimodular");
            space.action(&field, m)
        })
        .collect();
    let g = PermGroup::from_generators(space.len(), gens)
        .map_err(|e| FieldError::Group(format!("PSL{n}({q}): {e}")))?;
    let order = psl_order(n as u32, q as u64);
    if g.order() != &order {
        return Err(FieldError::Group(format!(
            "PSL{n}({q}): generators give order {}, expected {order}",
            g.order()
        )));
    }
    Ok(g)
}

/// PSU_n(q) acting on the isotropic points of the Hermitian form, n in 3..=4.
///
/// The unitary transvections over all isotropic points generate SU_n(q); a
/// fixed-seed search finds two short transvection words that already generate,
/// certified by the chain order matching the closed form.  Matching the full
/// order also certifies that the restriction to isotropic points is faithful.
pub fn psu(n: usize, q: u32) -> Result<PermGroup, FieldError> {
    assert!((3..=4).contains(&n), "only degrees 3..4 are built");
    if n == 3 && q == 2 {
        // SU3(2) is not generated by its transvections.
        return Err(FieldError::Group("PSU3(2) is not supported".into()));
    }
    let (p, f) = prime_power(q).ok_or(FieldError::NotPrime(q as u16))?;
    let field = Field::new(p, 2 * f)?;
    let space = ProjSpace::new(&field, n);
    let iso = unitary::isotropic_points(&field, &space);
    let mut pos = vec![u32::MAX; space.len()];
    for (k, &pi) in iso.iter().enumerate() {
        pos[pi] = k as u32;
    }
    let restrict = |m: &Mat| -> Perm {
        let full = space.action(&field, m);
        let images = iso.iter().map(|&pi| pos[full.apply(pi as u32) as usize]).collect();
        Perm::from_images(images).expect("isotropic points are invariant")
    };

    let mut transvections: Vec<Mat> = Vec::new();
    let tz = unitary::trace_zero_basis(&field);
    for &pi in &iso {
        for &lambda in &tz {
            let t = unitary::transvection(&field, &space.points()[pi], lambda);
            debug_assert!(unitary::preserves_form(&field, &t));
            debug_assert_eq!(t.det(&field), 1);
            transvections.push(t);
        }
    }

    let order = psu_order(n as u32, q as u64);
    let mut rng = RandomStream::new(0x5eed);
    for _ in 0..64 {
        let mut word = || {
            let mut m = Mat::identity(n);
            for _ in 0..6 + rng.below(6) {
                let pick = rng.below(transvections.len() as u64) as usize;
                m = m.mul(&field, &transvections[pick]);
            }
            m
        };
        let (a, b) = (word(), word());
        if a == Mat::identity(n) || b == Mat::identity(n) {
            continue;
        }
        let gens = vec![restrict(&a), restrict(&b)];
        let g = PermGroup::from_generators(iso.len(), gens)
            .map_err(|e| FieldError::Group(format!("PSU{n}({q}): {e}")))?;
        if g.order() == &order {
            return Ok(g);
        }
    }
    Err(FieldError::Group(format!(
        "PSU{n}({q}): no generating transvection pair found"
    )))
}
