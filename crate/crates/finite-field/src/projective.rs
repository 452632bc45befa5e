//! Points of the projective space PG(n-1, q) and the permutations induced on
//! them by invertible matrices.
//!
//! A point is the normalized representative of a 1-dimensional subspace: the
//! unique scalar multiple whose first nonzero coordinate is 1.  Points are
//! enumerated in lexicographic coordinate order, so indices are stable and
//! binary-searchable.

use perm_core::Perm;

use crate::field::Field;
use crate::matrix::Mat;

pub struct ProjSpace {
    pub n: usize,
    points: Vec<Vec<u16>>,
}

impl ProjSpace {
    pub fn new(field: &Field, n: usize) -> ProjSpace {
        let q = field.q() as u64;
        let expected = (0..n).map(|i| q.pow(i as u32)).sum::<u64>();
        let mut points = Vec::with_capacity(expected as usize);
        let mut v = vec![0u16; n];
        loop {
            if is_normalized(&v) {
                points.push(v.clone());
            }
            // Odometer increment, rightmost digit least significant, so
            // vectors arrive in slice-lexicographic order.
            let mut carried = true;
            for i in (0..n).rev() {
                if (v[i] as u32) < field.q() - 1 {
                    v[i] += 1;
                    carried = false;
                    break;
                }
                v[i] = 0;
            }
            if carried {
                break;
            }
        }
        assert_eq!(points.len() as u64, expected, "projective point count");
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        ProjSpace { n, points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<u16>] {
        &self.points
    }

    pub fn index_of(&self, normalized: &[u16]) -> Option<usize> {
        self.points
            .binary_search_by(|p| p.as_slice().cmp(normalized))
            .ok()
    }

    /// Permutation induced by an invertible matrix acting on row vectors.
    pub fn action(&self, field: &Field, m: &Mat) -> Perm {
        assert_eq!(m.n, self.n);
        let images: Vec<u32> = self
            .points
            .iter()
            .map(|p| {
                let w = normalize(field, &m.apply_row(field, p));
                self.index_of(&w).expect("matrix action is projective") as u32
            })
            .collect();
        Perm::from_images(images).expect("invertible matrix permutes points")
    }
}

fn is_normalized(v: &[u16]) -> bool {
    match v.iter().find(|&&x| x != 0) {
        Some(&first) => first == 1,
        None => false,
    }
}

/// Scales a nonzero vector so its first nonzero coordinate becomes 1.
pub fn normalize(field: &Field, v: &[u16]) -> Vec<u16> {
    let first = v.iter().copied().find(|&x| x != 0).expect("nonzero vector");
    if first == 1 {
        return v.to_vec();
    }
    let c = field.inv(first);
    v.iter().map(|&x| field.mul(c, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        for (p, f, n, expect) in [
            (2u16, 1u32, 3usize, 7usize), // Fano plane
            (7, 1, 2, 8),
            (2, 2, 3, 21),
            (3, 1, 4, 40),
            (5, 1, 4, 156),
            (3, 2, 4, 820),
        ] {
            let field = Field::new(p, f).unwrap();
            let space = ProjSpace::new(&field, n);
            assert_eq!(space.len(), expect);
        }
    }

    #[test]
    fn normalization_is_canonical() {
        let field = Field::new(5, 1).unwrap();
        let space = ProjSpace::new(&field, 3);
        for pt in space.points() {
            assert!(is_normalized(pt));
            // Every scalar multiple normalizes back to the stored point.
            for c in 1..5u16 {
                let scaled: Vec<u16> = pt.iter().map(|&x| field.mul(c, x)).collect();
                assert_eq!(&normalize(&field, &scaled), pt);
            }
        }
    }

    #[test]
    fn matrix_action_is_a_homomorphism() {
        let field = Field::new(3, 1).unwrap();
        let space = ProjSpace::new(&field, 3);
        let mut a = Mat::identity(3);
        a.set(0, 1, 1);
        let mut b = Mat::identity(3);
        b.set(2, 0, 2);
        b.set(1, 2, 1);
        let pa = space.action(&field, &a);
        let pb = space.action(&field, &b);
        let pab = space.action(&field, &a.mul(&field, &b));
        assert_eq!(&pa * &pb, pab);
    }
}
