//! Small finite fields GF(p^f), q <= 512, with full exp/log and addition
//! tables.  Elements are indices in 0..q encoding the residue polynomial in
//! base-p digits, so 0 and 1 are the field's zero and one.
//!
//! The discrete-log tables are built from a primitive polynomial; construction
//! verifies primitivity (the root's powers must enumerate all q-1 units), so a
//! bad table entry cannot produce a silently wrong field.

use crate::error::FieldError;

/// Primitive polynomials over GF(p), constant coefficient first, leading
/// coefficient 1 omitted.  Conway polynomials where a standard choice exists.
const POLYS: &[(u16, u32, &[u16])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (7, 2, &[3, 6]),
    (7, 3, &[4, 0, 6]),
    (11, 2, &[2, 7]),
    (13, 2, &[2, 12]),
    (17, 2, &[3, 16]),
    (19, 2, &[2, 18]),
];

pub const MAX_Q: u32 = 512;

pub struct Field {
    p: u16,
    f: u32,
    q: u32,
    /// exp[i] = root^i for i in 0..q-1.
    exp: Vec<u16>,
    /// log[exp[i]] = i; log[0] is unused.
    log: Vec<u32>,
    /// q*q addition table.
    add: Vec<u16>,
}

impl Field {
    pub fn new(p: u16, f: u32) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = (p as u64).checked_pow(f).filter(|&q| q <= MAX_Q as u64);
        let q = q.ok_or(FieldError::FieldTooLarge(p, f))? as u32;

        // Monic reduction polynomial, constant coefficient first.
        let poly: Vec<u16> = if f == 1 {
            vec![p - smallest_primitive_root(p)]
        } else {
            POLYS
                .iter()
                .find(|&&(tp, tf, _)| tp == p && tf == f)
                .map(|&(_, _, c)| c.to_vec())
                .ok_or(FieldError::NoPolynomial(p, f))?
        };

        // Powers of the root x, as base-p digit vectors reduced mod poly.
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = vec![0u16; f as usize];
        cur[0] = 1;
        for i in 0..q - 1 {
            let idx = digits_to_index(&cur, p);
            if log[idx as usize] != u32::MAX {
                return Err(FieldError::NotPrimitive(p, f));
            }
            log[idx as usize] = i;
            exp.push(idx);
            cur = mul_by_x(&cur, &poly, p);
        }
        if digits_to_index(&cur, p) != 1 {
            return Err(FieldError::NotPrimitive(p, f));
        }

        let mut add = vec![0u16; (q * q) as usize];
        for a in 0..q as u16 {
            for b in 0..=a {
                let mut sum = 0u32;
                let (mut da, mut db, mut place) = (a as u32, b as u32, 1u32);
                for _ in 0..f {
                    sum += (da % p as u32 + db % p as u32) % p as u32 * place;
                    da /= p as u32;
                    db /= p as u32;
                    place *= p as u32;
                }
                add[(a as u32 * q + b as u32) as usize] = sum as u16;
                add[(b as u32 * q + a as u32) as usize] = sum as u16;
            }
        }

        Ok(Field { p, f, q, exp, log, add })
    }

    pub fn p(&self) -> u16 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q as u16
    }

    /// The fixed primitive element (the residue class of x).
    pub fn primitive(&self) -> u16 {
        self.exp[if self.q == 2 { 0 } else { 1 }]
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[(a as u32 * self.q + b as u32) as usize]
    }

    pub fn neg(&self, a: u16) -> u16 {
        let (mut d, mut out, mut place) = (a as u32, 0u32, 1u32);
        for _ in 0..self.f {
            out += (self.p as u32 - d % self.p as u32) % self.p as u32 * place;
            d /= self.p as u32;
            place *= self.p as u32;
        }
        out as u16
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        let i = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q - 1) as u64;
        self.exp[i as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        assert_ne!(a, 0, "division by zero");
        let i = ((self.q - 1) - self.log[a as usize]) % (self.q - 1);
        self.exp[i as usize]
    }

    pub fn pow(&self, a: u16, k: u64) -> u16 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let i = (self.log[a as usize] as u128 * k as u128) % (self.q - 1) as u128;
        self.exp[i as usize]
    }

    /// nth power of the exp-table root.
    pub fn root_pow(&self, k: u64) -> u16 {
        self.exp[(k % (self.q - 1) as u64) as usize]
    }

    pub fn frobenius(&self, a: u16) -> u16 {
        self.pow(a, self.p as u64)
    }

    /// Conjugation x -> x^q0 over the index-2 subfield GF(q0), q = q0^2.
    pub fn conj(&self, a: u16) -> u16 {
        assert!(self.f % 2 == 0, "conjugation needs an even-degree field");
        self.pow(a, (self.p as u64).pow(self.f / 2))
    }
}

fn is_prime(p: u16) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn smallest_primitive_root(p: u16) -> u16 {
    if p == 2 {
        return 1;
    }
    let phi = (p - 1) as u64;
    let prime_factors: Vec<u64> = {
        let mut n = phi;
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                out.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    };
    'candidates: for g in 2..p {
        for &r in &prime_factors {
            if pow_mod(g as u64, phi / r, p as u64) == 1 {
                continue 'candidates;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root");
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn digits_to_index(digits: &[u16], p: u16) -> u16 {
    let mut out = 0u32;
    for &d in digits.iter().rev() {
        out = out * p as u32 + d as u32;
    }
    out as u16
}

/// Multiplies a residue polynomial by x and reduces mod the monic `poly`.
fn mul_by_x(digits: &[u16], poly: &[u16], p: u16) -> Vec<u16> {
    let f = digits.len();
    let carry = digits[f - 1] as u32;
    let mut out = vec![0u16; f];
    for j in (1..f).rev() {
        out[j] = digits[j - 1];
    }
    if carry != 0 {
        for j in 0..f {
            let v = out[j] as u32 + carry * (p as u32 - poly[j] as u32 % p as u32) % p as u32;
            out[j] = (v % p as u32) as u16;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(field: &Field) {
        let q = field.q() as u16;
        for a in 0..q {
            assert_eq!(field.add(a, field.neg(a)), 0);
            assert_eq!(field.mul(a, 1), a);
            if a != 0 {
                assert_eq!(field.mul(a, field.inv(a)), 1);
            }
            // Frobenius is the identity on the prime field.
            if (a as u32) < field.p() as u32 {
                assert_eq!(field.frobenius(a), a);
            }
        }
        // Spot-check distributivity on a deterministic sample.
        for a in (0..q).step_by(3) {
            for b in (0..q).step_by(5) {
                for c in (0..q).step_by(7) {
                    let lhs = field.mul(a, field.add(b, c));
                    let rhs = field.add(field.mul(a, b), field.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn prime_fields() {
        for p in [2u16, 3, 5, 7, 11, 13, 17, 19] {
            let f = Field::new(p, 1).unwrap();
            assert_eq!(f.q(), p as u32);
            check_axioms(&f);
        }
        // GF(7): 3 + 5 = 1, 3 * 5 = 1.
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(f7.add(3, 5), 1);
        assert_eq!(f7.mul(3, 5), 1);
    }

    #[test]
    fn extension_fields() {
        for (p, f) in [(2u16, 2u32), (2, 4), (2, 6), (3, 2), (3, 4), (5, 2), (7, 2)] {
            let field = Field::new(p, f).unwrap();
            assert_eq!(field.q(), (p as u32).pow(f));
            check_axioms(&field);
        }
    }

    #[test]
    fn gf9_structure() {
        let f = Field::new(3, 2).unwrap();
        // The primitive element generates all 8 units.
        let mut seen = std::collections::HashSet::new();
        let mut x = 1u16;
        for _ in 0..8 {
            x = f.mul(x, f.primitive());
            seen.insert(x);
        }
        assert_eq!(seen.len(), 8);
        assert_eq!(x, 1);
        // Conjugation x -> x^3 fixes exactly GF(3).
        let fixed: Vec<u16> = f.elements().filter(|&a| f.conj(a) == a).collect();
        assert_eq!(fixed.len(), 3);
        // Conjugation is an involution.
        for a in f.elements() {
            assert_eq!(f.conj(f.conj(a)), a);
        }
    }

    #[test]
    fn all_table_polynomials_are_primitive() {
        for &(p, f, _) in POLYS {
            assert!(Field::new(p, f).is_ok(), "GF({p}^{f}) table entry");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 10).is_err());
        assert!(Field::new(23, 2).is_err());
    }
}
