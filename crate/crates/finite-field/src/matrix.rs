//! Small square matrices over a finite field, row-major.  Vectors are rows
//! and act on the right: v -> v * M, matching left-to-right composition of
//! the induced permutations.

use crate::error::FieldError;
use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<u16>,
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        Mat { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> u16 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, f: &Field, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.at(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let add = f.mul(x, other.at(k, j));
                    out.a[i * n + j] = f.add(out.a[i * n + j], add);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, f: &Field, v: &[u16]) -> Vec<u16> {
        assert_eq!(v.len(), self.n);
        let n = self.n;
        let mut out = vec![0u16; n];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[j] = f.add(out[j], f.mul(x, self.at(i, j)));
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.a[j * n + i] = self.at(i, j);
            }
        }
        out
    }

    /// Entrywise field conjugation x -> x^q0 (for GF(q0^2)).
    pub fn conj(&self, f: &Field) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().map(|&x| f.conj(x)).collect(),
        }
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, f: &Field) -> u16 {
        let n = self.n;
        let mut m = self.a.clone();
        let mut det = 1u16;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0);
            let Some(pivot) = pivot else { return 0 };
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let d = m[col * n + col];
            det = f.mul(det, d);
            let dinv = f.inv(d);
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], dinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], sub);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Field) -> Result<Mat, FieldError> {
        let n = self.n;
        let mut m = self.a.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| m[r * n + col] != 0)
                .ok_or(FieldError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                    inv.a.swap(pivot * n + j, col * n + j);
                }
            }
            let dinv = f.inv(m[col * n + col]);
            for j in 0..n {
                m[col * n + j] = f.mul(m[col * n + j], dinv);
                inv.a[col * n + j] = f.mul(inv.a[col * n + j], dinv);
            }
            for r in 0..n {
                if r == col || m[r * n + col] == 0 {
                    continue;
                }
                let factor = m[r * n + col];
                for j in 0..n {
                    let s1 = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s1);
                    let s2 = f.mul(factor, inv.a[col * n + j]);
                    inv.a[r * n + j] = f.sub(inv.a[r * n + j], s2);
                }
            }
        }
        Ok(inv)
    }
}
