//! Exact arithmetic in Z[zeta_e], the ring of integers of the e-th
//! cyclotomic field, represented sparsely on the spanning set
//! {1, zeta, ..., zeta^(e-1)}.
//!
//! The representation is redundant (the spanning set satisfies relations),
//! so equality cannot be read off the coefficients.  A [`Reducer`] decides
//! exact equality: v = 0 in Z[zeta_e] iff Phi_e divides v as a polynomial,
//! iff the cyclic convolution of v with Psi_e = (x^e - 1)/Phi_e vanishes.

/// A cyclotomic integer: sum of coeff * zeta_e^exp over the sparse terms.
///
/// Invariant: exponents are strictly increasing, reduced mod e, and no
/// coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycInt {
    e: u32,
    terms: Vec<(u32, i64)>,
}

impl CycInt {
    pub fn zero(e: u32) -> CycInt {
        assert!(e >= 1);
        CycInt { e, terms: Vec::new() }
    }

    pub fn from_int(e: u32, n: i64) -> CycInt {
        let mut v = CycInt::zero(e);
        if n != 0 {
            v.terms.push((0, n));
        }
        v
    }

    pub fn one(e: u32) -> CycInt {
        CycInt::from_int(e, 1)
    }

    /// zeta_e^k.
    pub fn root(e: u32, k: u32) -> CycInt {
        CycInt { e, terms: vec![(k % e, 1)] }
    }

    fn from_dense(e: u32, dense: &[i128]) -> CycInt {
        let terms = dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i as u32, i64::try_from(c).expect("coefficient overflow")))
            .collect();
        CycInt { e, terms }
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn terms(&self) -> &[(u32, i64)] {
        &self.terms
    }

    /// True when every coefficient is zero.  A false result does not imply
    /// the value is nonzero; see [`Reducer::is_zero`].
    pub fn is_trivially_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        assert_eq!(self.e, other.e);
        let mut dense = vec![0i128; self.e as usize];
        for &(x, c) in self.terms.iter().chain(&other.terms) {
            dense[x as usize] += c as i128;
        }
        CycInt::from_dense(self.e, &dense)
    }

    pub fn sub(&self, other: &CycInt) -> CycInt {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            e: self.e,
            terms: self.terms.iter().map(|&(x, c)| (x, -c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> CycInt {
        if c == 0 {
            return CycInt::zero(self.e);
        }
        CycInt {
            e: self.e,
            terms: self
                .terms
                .iter()
                .map(|&(x, a)| (x, a.checked_mul(c).expect("coefficient overflow")))
                .collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        assert_eq!(self.e, other.e);
        let e = self.e as usize;
        let mut dense = vec![0i128; e];
        for &(xa, ca) in &self.terms {
            for &(xb, cb) in &other.terms {
                let x = (xa as usize + xb as usize) % e;
                dense[x] = dense[x]
                    .checked_add(ca as i128 * cb as i128)
                    .expect("coefficient overflow");
            }
        }
        CycInt::from_dense(self.e, &dense)
    }

    /// Complex conjugation, zeta -> zeta^(-1).
    pub fn conj(&self) -> CycInt {
        let mut terms: Vec<(u32, i64)> = self
            .terms
            .iter()
            .map(|&(x, c)| ((self.e - x) % self.e, c))
            .collect();
        terms.sort_unstable();
        CycInt { e: self.e, terms }
    }

    /// Image under the ring map zeta_e -> w, for w of order e in F_p.
    pub fn eval_mod(&self, p: u64, w: u64) -> u64 {
        let mut acc = 0u64;
        for &(x, c) in &self.terms {
            let cw = mulmod(c.rem_euclid(p as i64) as u64, pow_mod(w, x as u64, p), p);
            acc = (acc + cw) % p;
        }
        acc
    }
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut b: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while k > 0 {
        if k & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        k >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
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
}

/// An element of multiplicative order exactly e mod the prime l (requires
/// e | l - 1), found as gamma^((l-1)/e) for the smallest primitive root.
pub fn root_of_order(e: u64, l: u64) -> Option<u64> {
    let factors = prime_factors(l - 1);
    let mut gamma = 2;
    while !factors.iter().all(|&p| pow_mod(gamma, (l - 1) / p, l) != 1) {
        gamma += 1;
    }
    let w = pow_mod(gamma, (l - 1) / e, l);
    if pow_mod(w, e, l) != 1 || prime_factors(e).iter().any(|&p| pow_mod(w, e / p, l) == 1) {
        return None;
    }
    Some(w)
}

/// Decides exact equality in Z[zeta_e] for a fixed conductor e.
pub struct Reducer {
    e: u32,
    /// Coefficients of Psi_e = (x^e - 1)/Phi_e, constant term first.
    psi: Vec<i64>,
}

impl Reducer {
    pub fn new(e: u32) -> Reducer {
        assert!(e >= 1);
        let phi = cyclotomic_polynomial(e);
        let mut xe1 = vec![0i128; e as usize + 1];
        xe1[0] = -1;
        xe1[e as usize] = 1;
        let psi = divide_exact(&xe1, &phi)
            .into_iter()
            .map(|c| i64::try_from(c).expect("Psi coefficient overflow"))
            .collect();
        Reducer { e, psi }
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    /// v = 0 in Z[zeta_e]?  Exact: multiplies by Psi_e modulo x^e - 1 and
    /// checks for the zero polynomial.
    pub fn is_zero(&self, v: &CycInt) -> bool {
        assert_eq!(v.e, self.e);
        let e = self.e as usize;
        let mut acc = vec![0i128; e];
        for &(x, c) in &v.terms {
            for (k, &pc) in self.psi.iter().enumerate() {
                if pc != 0 {
                    let idx = (x as usize + k) % e;
                    acc[idx] = acc[idx]
                        .checked_add(c as i128 * pc as i128)
                        .expect("overflow in zero test");
                }
            }
        }
        acc.iter().all(|&c| c == 0)
    }

    /// v = n in Z[zeta_e]?
    pub fn is_int(&self, v: &CycInt, n: i64) -> bool {
        self.is_zero(&v.sub(&CycInt::from_int(self.e, n)))
    }
}

/// Phi_n by the divisor recursion Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
fn cyclotomic_polynomial(n: u32) -> Vec<i128> {
    let mut phis: Vec<(u32, Vec<i128>)> = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut poly = vec![0i128; d as usize + 1];
        poly[0] = -1;
        poly[d as usize] = 1;
        for (d2, phi) in &phis {
            if d % d2 == 0 {
                poly = divide_exact(&poly, phi);
            }
        }
        phis.push((d, poly));
    }
    phis.pop().expect("n >= 1").1
}

/// Exact division of polynomials with integer coefficients; the divisor must
/// be monic and divide evenly.
fn divide_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(rem.len() > dd);
    let mut quot = vec![0i128; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(dc).expect("division overflow"))
                    .expect("division overflow");
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Psi_6 = Phi_1 Phi_2 Phi_3 = x^4 + x^3 - x - 1.
        assert_eq!(Reducer::new(6).psi, vec![-1, -1, 0, 1, 1]);
    }

    #[test]
    fn zero_tests_catch_hidden_zeros() {
        for e in [2u32, 3, 4, 6, 12, 30, 84] {
            let red = Reducer::new(e);
            // The full sum of e-th roots vanishes, invisibly to the sparse
            // representation.
            let mut s = CycInt::zero(e);
            for k in 0..e {
                s = s.add(&CycInt::root(e, k));
            }
            assert!(red.is_zero(&s));
            assert!(!s.is_trivially_zero());
            assert!(!red.is_zero(&CycInt::one(e)));
            assert!(red.is_zero(&CycInt::zero(e)));
        }
        let red1 = Reducer::new(1);
        assert!(!red1.is_zero(&CycInt::one(1)));
        assert!(red1.is_int(&CycInt::from_int(1, 9), 9));
        // zeta_6^2 - zeta_6 + 1 = 0.
        let red = Reducer::new(6);
        let v = CycInt::root(6, 2).sub(&CycInt::root(6, 1)).add(&CycInt::one(6));
        assert!(red.is_zero(&v));
        // zeta_4^2 = -1.
        let red = Reducer::new(4);
        assert!(red.is_int(&CycInt::root(4, 2), -1));
        assert!(!red.is_int(&CycInt::root(4, 1), 1));
    }

    #[test]
    fn ring_operations() {
        let e = 12;
        let a = CycInt::root(e, 3).scale(2).add(&CycInt::from_int(e, 5));
        let b = CycInt::root(e, 9).sub(&CycInt::one(e));
        let red = Reducer::new(e);
        // (2z^3 + 5)(z^9 - 1): z^3 * z^9 = 1.
        let prod = a.mul(&b);
        let manual = CycInt::from_int(e, 2)
            .add(&CycInt::root(e, 9).scale(5))
            .sub(&CycInt::root(e, 3).scale(2))
            .sub(&CycInt::from_int(e, 5));
        assert!(red.is_zero(&prod.sub(&manual)));
        // Conjugation is an involution and fixes integers.
        assert_eq!(a.conj().conj(), a);
        assert_eq!(CycInt::from_int(e, 7).conj(), CycInt::from_int(e, 7));
        // Norm of z^3 (= i): z^3 * z^(-3) = 1.
        let z3 = CycInt::root(e, 3);
        assert!(red.is_int(&z3.mul(&z3.conj()), 1));
    }

    #[test]
    fn evaluation_respects_the_ring_map() {
        // 13 = 1 mod 12; 2 is a primitive root mod 13, so 2 has order 12.
        let (p, w) = (13u64, 2u64);
        assert_eq!(pow_mod(w, 12, p), 1);
        for k in [2u64, 3, 4, 6] {
            assert_ne!(pow_mod(w, 12 / k, p), 1);
        }
        let a = CycInt::root(12, 5).scale(3).sub(&CycInt::from_int(12, 2));
        let b = CycInt::root(12, 7).add(&CycInt::one(12));
        let eval = |v: &CycInt| v.eval_mod(p, w);
        assert_eq!(eval(&a.mul(&b)), mulmod(eval(&a), eval(&b), p));
        assert_eq!(eval(&a.add(&b)), (eval(&a) + eval(&b)) % p);
    }
}
