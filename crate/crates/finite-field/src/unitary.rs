//! Hermitian geometry over GF(q^2): the antidiagonal Hermitian form, its
//! isotropic projective points, and unitary transvections.

use crate::field::Field;
use crate::matrix::Mat;
use crate::projective::ProjSpace;

/// The Hermitian form B(x, y) = sum_i x_i * conj(y_{n-1-i}) (antidiagonal
/// Gram matrix of ones).  Requires a field of even degree.
pub fn b_form(field: &Field, x: &[u16], y: &[u16]) -> u16 {
    let n = x.len();
    assert_eq!(n, y.len());
    let mut acc = 0u16;
    for i in 0..n {
        acc = field.add(acc, field.mul(x[i], field.conj(y[n - 1 - i])));
    }
    acc
}

pub fn form_matrix(n: usize) -> Mat {
    let mut j = Mat::zero(n);
    for i in 0..n {
        j.set(i, n - 1 - i, 1);
    }
    j
}

pub fn is_isotropic(field: &Field, v: &[u16]) -> bool {
    b_form(field, v, v) == 0
}

/// Indices of the isotropic points of the space.
pub fn isotropic_points(field: &Field, space: &ProjSpace) -> Vec<usize> {
    space
        .points()
        .iter()
        .enumerate()
        .filter(|(_, p)| is_isotropic(field, p))
        .map(|(i, _)| i)
        .collect()
}

/// True iff M J conj(M)^T = J, i.e. M preserves the Hermitian form.
pub fn preserves_form(field: &Field, m: &Mat) -> bool {
    let j = form_matrix(m.n);
    let lhs = m.mul(field, &j).mul(field, &m.conj(field).transpose());
    lhs == j
}

/// An F_p-basis of the trace-zero subspace {x in GF(q^2) : x + x^q = 0},
/// the valid transvection parameters.
pub fn trace_zero_basis(field: &Field) -> Vec<u16> {
    let kernel: Vec<u16> = field
        .elements()
        .filter(|&x| field.add(x, field.conj(x)) == 0)
        .collect();
    // The kernel is tiny (sqrt(q) elements): grow a basis by span closure.
    let mut basis: Vec<u16> = Vec::new();
    let mut span: Vec<u16> = vec![0];
    for &x in &kernel {
        if span.contains(&x) {
            continue;
        }
        basis.push(x);
        let mut next = Vec::new();
        for &s in &span {
            let mut scaled = 0u16;
            for _ in 0..field.p() {
                next.push(field.add(s, scaled));
                scaled = field.add(scaled, x);
            }
        }
        next.sort_unstable();
        next.dedup();
        span = next;
    }
    debug_assert_eq!(span.len(), kernel.len());
    basis
}

/// Unitary transvection for an isotropic row vector v and trace-zero lambda:
/// x -> x + lambda * B(x, v) * v, as the matrix I + lambda * w (x) v with
/// w = J * conj(v)^T.  Preserves the form and has determinant 1.
pub fn transvection(field: &Field, v: &[u16], lambda: u16) -> Mat {
    let n = v.len();
    debug_assert!(is_isotropic(field, v));
    debug_assert_eq!(field.add(lambda, field.conj(lambda)), 0);
    let mut m = Mat::identity(n);
    for i in 0..n {
        let w_i = field.conj(v[n - 1 - i]);
        if w_i == 0 {
            continue;
        }
        for j in 0..n {
            let delta = field.mul(field.mul(lambda, w_i), v[j]);
            m.set(i, j, field.add(m.at(i, j), delta));
        }
    }
    m
}
