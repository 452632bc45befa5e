//! Ordinary character tables over Z[zeta_e], computed by splitting the
//! class algebra over a prime field F_l with l = 1 mod e and l > 2 sqrt|G|.
//!
//! The class-sum matrices A_i with (A_i)_{jk} = a_ijk commute, and their
//! joint eigenvectors are the central characters w_j = n_j chi(g_j)/chi(1).
//! Splitting the joint eigenspaces, recovering degrees from the first
//! orthogonality relation, and lifting eigenvalue multiplicities of each
//! rho(g_j) yields the exact table.  Everything downstream of the structure
//! constants is deterministic.

use perm_core::PermGroup;

use crate::classes::Classes;
use crate::cyclotomic::{is_prime, mulmod, pow_mod, root_of_order, CycInt, Reducer};
use crate::error::ClassError;

pub struct CharacterTable {
    e: u32,
    group_order: u64,
    class_sizes: Vec<u64>,
    class_orders: Vec<u64>,
    inverse_class: Vec<usize>,
    degrees: Vec<u64>,
    /// values[character][class], characters sorted by (degree, values) with
    /// the trivial character first.
    values: Vec<Vec<CycInt>>,
}

pub fn character_table(g: &PermGroup, classes: &Classes) -> Result<CharacterTable, ClassError> {
    let order = classes.group_order();
    let k = classes.len();
    let e = u32::try_from(classes.exponent()).expect("exponent fits u32");
    let sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
    let inv: Vec<usize> = (0..k).map(|i| classes.inverse_class(i)).collect();

    let a = structure_constants(g, classes)?;
    let l = splitting_prime(e, order);

    // Split F_l^k into the joint eigenspaces of the class-sum matrices.
    let mut pending: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut eigenvectors: Vec<Vec<u64>> = Vec::new();
    let full = identity_basis(k);
    if full.len() == 1 {
        eigenvectors.push(full.into_iter().next().unwrap());
    } else {
        pending.push(full);
    }
    for i in 1..k {
        if pending.is_empty() {
            break;
        }
        let ai: Vec<Vec<u64>> = (0..k)
            .map(|j| (0..k).map(|t| a[(i * k + j) * k + t] % l).collect())
            .collect();
        let mut next = Vec::new();
        for basis in pending.drain(..) {
            for sub in split_by(&ai, basis, l) {
                if sub.len() == 1 {
                    eigenvectors.push(sub.into_iter().next().unwrap());
                } else {
                    next.push(sub);
                }
            }
        }
        pending = next;
    }
    if !pending.is_empty() || eigenvectors.len() != k {
        return Err(ClassError::Character(format!(
            "class algebra did not split: {} eigenvectors of {k}",
            eigenvectors.len()
        )));
    }

    // Normalize w_0 = 1 and recover degrees: d^2 = |G| / sum_j w_j w_j* / n_j.
    let ord_l = order % l;
    let mut rows: Vec<(u64, Vec<u64>)> = Vec::new();
    for mut w in eigenvectors {
        let w0_inv = inv_mod(w[0], l);
        for x in w.iter_mut() {
            *x = mulmod(*x, w0_inv, l);
        }
        let mut s = 0u64;
        for j in 0..k {
            let t = mulmod(w[j], w[inv[j]], l);
            s = (s + mulmod(t, inv_mod(sizes[j] % l, l), l)) % l;
        }
        let d2 = mulmod(ord_l, inv_mod(s, l), l);
        let r = sqrt_mod(d2, l).ok_or_else(|| {
            ClassError::Character("degree squared is not a square mod l".into())
        })?;
        let d = r.min(l - r);
        if d == 0 || mulmod(d, d, l) != d2 {
            return Err(ClassError::Character("degree recovery failed".into()));
        }
        // chi_l(g_j) = d w_j / n_j.
        let chi: Vec<u64> = (0..k)
            .map(|j| mulmod(mulmod(d, w[j], l), inv_mod(sizes[j] % l, l), l))
            .collect();
        rows.push((d, chi));
    }
    let sum_d2: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if sum_d2 != order {
        return Err(ClassError::Character(format!(
            "degree check failed: sum of squares {sum_d2} != {order}"
        )));
    }

    // Lift each chi_l(g_j) to Z[zeta_e] via eigenvalue multiplicities:
    // mu_u = (1/m) sum_s chi_l(g_j^s) z_m^(-us), with z_m of order m in F_l.
    let w_root = root_of_order(e as u64, l)
        .ok_or_else(|| ClassError::Character("no element of order e mod l".into()))?;
    let orders: Vec<u64> = classes.iter().map(|c| c.element_order).collect();
    let power_class: Vec<Vec<usize>> = (0..k)
        .map(|j| (0..orders[j]).map(|s| classes.power_class(j, s)).collect())
        .collect();
    let mut table: Vec<(u64, Vec<CycInt>)> = Vec::new();
    for (d, chi) in rows {
        let mut values = Vec::with_capacity(k);
        for j in 0..k {
            let m = orders[j];
            let m_inv = inv_mod(m % l, l);
            let z = pow_mod(w_root, e as u64 / m, l);
            let mut terms: Vec<(u32, i64)> = Vec::new();
            let mut total = 0u64;
            for u in 0..m {
                let mut acc = 0u64;
                for s in 0..m {
                    let zexp = (m - (u * s) % m) % m;
                    acc = (acc + mulmod(chi[power_class[j][s as usize]], pow_mod(z, zexp, l), l)) % l;
                }
                let mu = mulmod(acc, m_inv, l);
                if mu > d {
                    return Err(ClassError::Character(format!(
                        "multiplicity {mu} exceeds degree {d}"
                    )));
                }
                total += mu;
                if mu != 0 {
                    terms.push(((u as u32 * (e / m as u32)) % e, mu as i64));
                }
            }
            if total != d {
                return Err(ClassError::Character(format!(
                    "multiplicities sum to {total}, expected degree {d}"
                )));
            }
            terms.sort_unstable();
            values.push(cyc_from_terms(e, terms));
        }
        table.push((d, values));
    }

    table.sort();
    let trivial: Vec<CycInt> = (0..k).map(|_| CycInt::one(e)).collect();
    let t = table
        .iter()
        .position(|(d, v)| *d == 1 && *v == trivial)
        .ok_or_else(|| ClassError::Character("trivial character missing".into()))?;
    let row = table.remove(t);
    table.insert(0, row);

    Ok(CharacterTable {
        e,
        group_order: order,
        class_sizes: sizes,
        class_orders: orders,
        inverse_class: inv,
        degrees: table.iter().map(|(d, _)| *d).collect(),
        values: table.into_iter().map(|(_, v)| v).collect(),
    })
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn class_orders(&self) -> &[u64] {
        &self.class_orders
    }

    pub fn inverse_class(&self, j: usize) -> usize {
        self.inverse_class[j]
    }

    /// chi_a(g_j).
    pub fn value(&self, a: usize, j: usize) -> &CycInt {
        &self.values[a][j]
    }

    pub fn reducer(&self) -> Reducer {
        Reducer::new(self.e)
    }

    /// Exact verification: sum of squared degrees, row orthogonality, and
    /// column orthogonality, all in Z[zeta_e].
    pub fn verify(&self) -> Result<(), ClassError> {
        let k = self.num_classes();
        let fail = |what: String| Err(ClassError::Character(what));
        if self.degrees.iter().map(|d| d * d).sum::<u64>() != self.group_order {
            return fail("sum of squared degrees".into());
        }
        if self.degrees[0] != 1 || self.values[0].iter().any(|v| *v != CycInt::one(self.e)) {
            return fail("first character is not trivial".into());
        }
        let red = self.reducer();
        let big = i64::try_from(self.group_order).expect("order fits i64");
        for a in 0..k {
            for b in a..k {
                let mut s = CycInt::zero(self.e);
                for j in 0..k {
                    let term = self.values[a][j].mul(&self.values[b][j].conj());
                    s = s.add(&term.scale(self.class_sizes[j] as i64));
                }
                let expect = if a == b { big } else { 0 };
                if !red.is_int(&s, expect) {
                    return fail(format!("row orthogonality ({a},{b})"));
                }
            }
        }
        for i in 0..k {
            for j in i..k {
                let mut s = CycInt::zero(self.e);
                for a in 0..k {
                    s = s.add(&self.values[a][i].mul(&self.values[a][j].conj()));
                }
                let expect = if i == j {
                    i64::try_from(self.group_order / self.class_sizes[i]).unwrap()
                } else {
                    0
                };
                if !red.is_int(&s, expect) {
                    return fail(format!("column orthogonality ({i},{j})"));
                }
            }
        }
        Ok(())
    }
}

fn cyc_from_terms(e: u32, terms: Vec<(u32, i64)>) -> CycInt {
    let mut v = CycInt::zero(e);
    for (x, c) in terms {
        v = v.add(&CycInt::root(e, x).scale(c));
    }
    v
}

/// a[(i*k + j)*k + t] = #{x in C_i : x^-1 z_t in C_j}, the class algebra
/// structure constants K_i K_j = sum_t a_ijt K_t.
fn structure_constants(g: &PermGroup, classes: &Classes) -> Result<Vec<u64>, ClassError> {
    let k = classes.len();
    let reps: Vec<_> = (0..k).map(|t| classes.class(t).rep.clone()).collect();
    let mut a = vec![0u64; k * k * k];
    for x in g.elements()? {
        let i = classes.classify(&x).expect("element of the group");
        let xi = x.inverse();
        for (t, z) in reps.iter().enumerate() {
            let j = classes.classify(&(&xi * z)).expect("element of the group");
            a[(i * k + j) * k + t] += 1;
        }
    }
    // Row sums and the identity class pin down gross errors.
    for i in 0..k {
        for t in 0..k {
            let sum: u64 = (0..k).map(|j| a[(i * k + j) * k + t]).sum();
            assert_eq!(sum, classes.class(i).size, "structure constant row sum");
        }
        for t in 0..k {
            let expect = if i == t { 1 } else { 0 };
            assert_eq!(a[i * k + t], expect, "identity class row");
        }
    }
    Ok(a)
}

/// Smallest prime l = 1 mod e with l > 2 sqrt(order); such l never divides
/// the group order, since every prime divisor of the order divides e.
fn splitting_prime(e: u32, order: u64) -> u64 {
    let mut l = e as u64 + 1;
    loop {
        if l > 2 && l * l > 4 * order && is_prime(l) {
            return l;
        }
        l += e as u64;
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "not invertible");
    pow_mod(a, p - 2, p)
}

/// Tonelli-Shanks square root mod an odd prime.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mulmod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

fn identity_basis(k: usize) -> Vec<Vec<u64>> {
    (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect()
}

/// First nonzero column of each row of a reduced echelon basis.
fn pivot_columns(basis: &[Vec<u64>]) -> Vec<usize> {
    basis
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect()
}

/// Splits an invariant subspace (basis in reduced row echelon form) into the
/// eigenspaces of `a` restricted to it.
fn split_by(a: &[Vec<u64>], basis: Vec<Vec<u64>>, l: u64) -> Vec<Vec<Vec<u64>>> {
    let d = basis.len();
    let pivots = pivot_columns(&basis);
    // Restriction R: column t holds the basis coordinates of A * basis[t].
    let mut r = vec![vec![0u64; d]; d];
    for t in 0..d {
        let v = mat_vec(a, &basis[t], l);
        for s in 0..d {
            r[s][t] = v[pivots[s]];
        }
        debug_assert_eq!(
            v,
            (0..v.len())
                .map(|j| {
                    let mut acc = 0;
                    for s in 0..d {
                        acc = (acc + mulmod(r[s][t], basis[s][j], l)) % l;
                    }
                    acc
                })
                .collect::<Vec<_>>(),
            "subspace is not invariant"
        );
    }
    let poly = char_poly(&r, l);
    let mut out = Vec::new();
    for lambda in 0..l {
        if eval_poly(&poly, lambda, l) != 0 {
            continue;
        }
        let mut shifted = r.clone();
        for s in 0..d {
            shifted[s][s] = (shifted[s][s] + l - lambda) % l;
        }
        let kernel = null_space(&shifted, l);
        assert!(!kernel.is_empty(), "root of the characteristic polynomial");
        let dim = kernel.len();
        // Map coordinate vectors back to ambient vectors.
        let mut sub: Vec<Vec<u64>> = kernel
            .iter()
            .map(|c| {
                let mut v = vec![0u64; basis[0].len()];
                for s in 0..d {
                    for (j, x) in v.iter_mut().enumerate() {
                        *x = (*x + mulmod(c[s], basis[s][j], l)) % l;
                    }
                }
                v
            })
            .collect();
        rref(&mut sub, l);
        assert_eq!(sub.len(), dim, "kernel basis stays independent");
        out.push(sub);
    }
    assert_eq!(
        out.iter().map(|s| s.len()).sum::<usize>(),
        d,
        "eigenspaces of a split matrix fill the subspace"
    );
    out
}

fn mat_vec(a: &[Vec<u64>], v: &[u64], l: u64) -> Vec<u64> {
    a.iter()
        .map(|row| {
            let mut acc = 0;
            for (x, y) in row.iter().zip(v) {
                acc = (acc + mulmod(*x, *y, l)) % l;
            }
            acc
        })
        .collect()
}

/// det(x I - r) by evaluation at d+1 points and Lagrange interpolation;
/// returned monic, constant term first.
fn char_poly(r: &[Vec<u64>], l: u64) -> Vec<u64> {
    let d = r.len();
    let points: Vec<u64> = (0..=d as u64).collect();
    let values: Vec<u64> = points
        .iter()
        .map(|&x| {
            let mut m = r.to_vec();
            for s in 0..d {
                for t in 0..d {
                    m[s][t] = (l - m[s][t]) % l;
                }
                m[s][s] = (m[s][s] + x) % l;
            }
            det(&mut m, l)
        })
        .collect();
    let mut poly = vec![0u64; d + 1];
    for t in 0..points.len() {
        // Basis polynomial prod_{s != t} (x - x_s) / (x_t - x_s).
        let mut num = vec![1u64];
        let mut denom = 1u64;
        for s in 0..points.len() {
            if s == t {
                continue;
            }
            num = poly_mul_linear(&num, points[s], l);
            denom = mulmod(denom, (points[t] + l - points[s]) % l, l);
        }
        let scale = mulmod(values[t], inv_mod(denom, l), l);
        for (c, n) in poly.iter_mut().zip(&num) {
            *c = (*c + mulmod(scale, *n, l)) % l;
        }
    }
    assert_eq!(*poly.last().unwrap(), 1, "characteristic polynomial is monic");
    poly
}

/// p(x) * (x - root).
fn poly_mul_linear(p: &[u64], root: u64, l: u64) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i + 1] = (out[i + 1] + c) % l;
        out[i] = (out[i] + mulmod(c, (l - root) % l, l)) % l;
    }
    out
}

fn eval_poly(p: &[u64], x: u64, l: u64) -> u64 {
    let mut acc = 0;
    for &c in p.iter().rev() {
        acc = (mulmod(acc, x, l) + c) % l;
    }
    acc
}

fn det(m: &mut [Vec<u64>], l: u64) -> u64 {
    let d = m.len();
    let mut acc = 1u64;
    for col in 0..d {
        let Some(pr) = (col..d).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pr != col {
            m.swap(pr, col);
            acc = l - acc;
        }
        let inv = inv_mod(m[col][col], l);
        acc = mulmod(acc, m[col][col], l);
        for r in col + 1..d {
            let f = mulmod(m[r][col], inv, l);
            if f == 0 {
                continue;
            }
            for t in col..d {
                let sub = mulmod(f, m[col][t], l);
                m[r][t] = (m[r][t] + l - sub) % l;
            }
        }
    }
    acc % l
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, l: u64) -> Vec<usize> {
    let cols = if rows.is_empty() { 0 } else { rows[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(pr, r);
        let inv = inv_mod(rows[r][c], l);
        for x in rows[r].iter_mut() {
            *x = mulmod(*x, inv, l);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for t in 0..cols {
                    let sub = mulmod(f, rows[r][t], l);
                    rows[i][t] = (rows[i][t] + l - sub) % l;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of {v : m v = 0} in coordinate space.
fn null_space(m: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, l);
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; d];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (l - rows[r][fc]) % l;
            }
            v
        })
        .collect()
}
