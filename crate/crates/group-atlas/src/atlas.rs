//! Named group constructors and the name grammar
//! `A<n> | S<n> | M22 | L<d>(<q>) | U<d>(<q>)`.

use num_bigint::BigUint;
use num_traits::One;
use perm_core::{Perm, PermGroup, RandomStream};

use crate::error::AtlasError;

/// A group from the atlas together with its branching metadata: the cyclic
/// point-stabilizer orders whose coset actions realize fixity 3 and fixity 2.
pub struct AtlasGroup {
    pub name: String,
    pub group: PermGroup,
    pub fixity3_order: Option<u64>,
    pub fixity2_orders: Vec<u64>,
}

pub fn lookup(name: &str) -> Result<AtlasGroup, AtlasError> {
    let canon: String = name
        .trim()
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_uppercase();
    if canon == "M22" {
        return Ok(AtlasGroup {
            name: canon,
            group: m22()?,
            fixity3_order: Some(7),
            fixity2_orders: Vec::new(),
        });
    }
    let Some(head) = canon.chars().next() else {
        return Err(AtlasError::UnknownName(name.into()));
    };
    let rest = &canon[1..];
    match head {
        'A' => {
            let n: usize = rest
                .parse()
                .map_err(|_| AtlasError::UnknownName(name.into()))?;
            Ok(AtlasGroup {
                name: canon,
                group: alternating(n)?,
                fixity3_order: (n == 7 || n == 8).then_some(7),
                fixity2_orders: Vec::new(),
            })
        }
        'S' => {
            let n: usize = rest
                .parse()
                .map_err(|_| AtlasError::UnknownName(name.into()))?;
            Ok(AtlasGroup {
                name: canon,
                group: symmetric(n)?,
                fixity3_order: None,
                fixity2_orders: Vec::new(),
            })
        }
        'L' | 'U' => {
            let (dim_s, q_s) = rest
                .split_once('(')
                .ok_or_else(|| AtlasError::UnknownName(name.into()))?;
            let q_s = q_s
                .strip_suffix(')')
                .ok_or_else(|| AtlasError::UnknownName(name.into()))?;
            let dim: usize = dim_s
                .parse()
                .map_err(|_| AtlasError::UnknownName(name.into()))?;
            let q: u32 = q_s
                .parse()
                .map_err(|_| AtlasError::UnknownName(name.into()))?;
            let group = match (head, dim) {
                ('L', 2..=4) => finite_field::psl(dim, q)?,
                ('U', 3..=4) => finite_field::psu(dim, q)?,
                _ => return Err(AtlasError::Unsupported(canon)),
            };
            let (fixity3_order, fixity2_orders) = linear_metadata(head, dim, q);
            Ok(AtlasGroup {
                name: canon,
                group,
                fixity3_order,
                fixity2_orders,
            })
        }
        _ => Err(AtlasError::UnknownName(name.into())),
    }
}

/// Designated branching orders for the linear and unitary families.  For
/// dimension 3, the order is alpha = (q^2 + eq + 1)/gcd(3, q - e).
fn linear_metadata(head: char, dim: usize, q: u32) -> (Option<u64>, Vec<u64>) {
    let q = q as u64;
    match (head, dim) {
        ('L', 2) if q == 7 => (Some(7), vec![3, 4]),
        ('L', 3) => {
            let alpha = (q * q + q + 1) / gcd(3, q - 1);
            let fixity2 = if q == 4 { vec![5] } else { Vec::new() };
            (Some(alpha), fixity2)
        }
        ('U', 3) => (Some((q * q - q + 1) / gcd(3, q + 1)), Vec::new()),
        ('L', 4) if q == 3 => (Some(13), Vec::new()),
        ('L', 4) if q == 5 => (Some(31), Vec::new()),
        ('U', 4) if q == 3 => (Some(7), Vec::new()),
        _ => (None, Vec::new()),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factorial(n: u64) -> BigUint {
    let mut out = BigUint::one();
    for i in 2..=n {
        out *= BigUint::from(i);
    }
    out
}

fn cycle_string(from: usize, to: usize) -> String {
    let mut s = String::from("(");
    for i in from..=to {
        if i > from {
            s.push(',');
        }
        s.push_str(&i.to_string());
    }
    s.push(')');
    s
}

fn checked(group: PermGroup, expected: BigUint, what: &str) -> Result<PermGroup, AtlasError> {
    if group.order() != &expected {
        return Err(AtlasError::Perm(perm_core::PermError::OrderMismatch(
            format!("{what}: built order {}, expected {expected}", group.order()),
        )));
    }
    Ok(group)
}

/// A_n on n points, 3 <= n <= 32.
pub fn alternating(n: usize) -> Result<PermGroup, AtlasError> {
    if !(3..=32).contains(&n) {
        return Err(AtlasError::Unsupported(format!("A{n}")));
    }
    let three = Perm::parse("(1,2,3)", n)?;
    let long = if n % 2 == 1 {
        Perm::parse(&cycle_string(1, n), n)?
    } else {
        Perm::parse(&cycle_string(2, n), n)?
    };
    let g = PermGroup::from_generators(n, vec![three, long])?;
    checked(g, factorial(n as u64) / 2u32, &format!("A{n}"))
}

/// S_n on n points, 2 <= n <= 32.
pub fn symmetric(n: usize) -> Result<PermGroup, AtlasError> {
    if !(2..=32).contains(&n) {
        return Err(AtlasError::Unsupported(format!("S{n}")));
    }
    let swap = Perm::parse("(1,2)", n)?;
    let long = Perm::parse(&cycle_string(1, n), n)?;
    let g = PermGroup::from_generators(n, vec![swap, long])?;
    checked(g, factorial(n as u64), &format!("S{n}"))
}

/// M22 on 22 points from a standard generating pair.
pub fn m22() -> Result<PermGroup, AtlasError> {
    let a = Perm::parse(
        "(1,3,18,14,6,10,17,21,13,5,11)(2,7,8,16,12,4,9,20,22,15,19)",
        22,
    )?;
    let b = Perm::parse(
        "(1,19,12,13,3,11)(2,5,16,9,7,14)(4,8,10)(6,17)(15,22,20)(18,21)",
        22,
    )?;
    let g = PermGroup::from_generators(22, vec![a, b])?;
    checked(g, BigUint::from(443_520u32), "M22")
}

/// A cyclic subgroup of order m, found by powering random elements.
pub fn stabilizer_subgroup(
    g: &PermGroup,
    m: u64,
    rng: &mut RandomStream,
) -> Result<PermGroup, AtlasError> {
    assert!(m > 1, "stabilizer order must exceed 1");
    for _ in 0..10_000 {
        let x = g.random_element(rng);
        let o = x.order();
        if o % m == 0 {
            let h = x.pow(o / m);
            let sub = PermGroup::from_generators(g.degree(), vec![h])?;
            return checked(sub, BigUint::from(m), &format!("C{m}"));
        }
    }
    Err(AtlasError::NoElementOfOrder(m))
}
