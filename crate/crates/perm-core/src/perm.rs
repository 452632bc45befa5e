//! Dense permutations on points 0..degree (0-based internally, 1-based in text I/O).
//!
//! Composition is left-to-right: `(p * q)` maps x to q(p(x)), so in a product
//! the leftmost factor acts first.  Conjugation is `g^h = h^-1 * g * h` and the
//! commutator is `[g, h] = g^-1 * h^-1 * g * h`.

use std::fmt;
use std::ops::Mul;

use crate::error::PermError;

/// Hard cap on permutation degree (2^20); coset actions stay under this.
pub const MAX_DEGREE: usize = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= MAX_DEGREE);
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image table, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Perm, PermError> {
        if images.len() > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(images.len(), MAX_DEGREE));
        }
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &im in &images {
            if im >= n || seen[im as usize] {
                return Err(PermError::NotBijective(im + 1));
            }
            seen[im as usize] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, p: u32) -> u32 {
        self.images[p as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// Checked composition; see the module doc for the convention.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self * other)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `h^-1 * self * h`, computed in one pass.
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        assert_eq!(self.degree(), h.degree());
        let mut out = vec![0u32; self.images.len()];
        for i in 0..self.images.len() {
            out[h.images[i] as usize] = h.images[self.images[i] as usize];
        }
        Perm {
            images: out.into_boxed_slice(),
        }
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        &(&a.inverse() * &b.inverse()) * &(a * b)
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord: u128 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut p = start as u32;
            loop {
                seen[p as usize] = true;
                len += 1;
                p = self.images[p as usize];
                if p as usize == start {
                    break;
                }
            }
            ord = lcm_u128(ord, len);
            assert!(ord <= u64::MAX as u128, "element order overflow");
        }
        ord as u64
    }

    /// k-th power via cycle rotation; exact for any exponent.
    pub fn pow(&self, k: u64) -> Perm {
        let n = self.images.len();
        let mut out = vec![0u32; n];
        let mut seen = vec![false; n];
        let mut cycle: Vec<u32> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycle.clear();
            let mut p = start as u32;
            loop {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
                if p as usize == start {
                    break;
                }
            }
            let len = cycle.len() as u64;
            let shift = (k % len) as usize;
            for (i, &pt) in cycle.iter().enumerate() {
                out[pt as usize] = cycle[(i + shift) % cycle.len()];
            }
        }
        Perm {
            images: out.into_boxed_slice(),
        }
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start as u32;
            loop {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
                if p as usize == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    pub fn smallest_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &im)| *i as u32 != im)
            .map(|(i, _)| i as u32)
    }

    pub fn moved_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &im)| *i as u32 != im)
            .count()
    }

    /// Extends to a larger degree, fixing the new points.
    pub fn pad(&self, degree: usize) -> Result<Perm, PermError> {
        if degree < self.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), degree));
        }
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree, MAX_DEGREE));
        }
        let mut images: Vec<u32> = self.images.to_vec();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses disjoint cycle notation with 1-based points: `(1,8,4)(2,7,3)`,
    /// identity `()`.  Whitespace is ignored.  Degree is the largest point named,
    /// or `min_degree` if larger.
    pub fn parse(s: &str, min_degree: usize) -> Result<Perm, PermError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(PermError::Parse("empty input".into()));
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(PermError::Parse(format!("expected '(' at `{rest}`")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::Parse("unbalanced '('".into()))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            if body.is_empty() {
                continue; // "()" = identity contribution
            }
            let mut cycle = Vec::new();
            for tok in body.split(',') {
                let p: u32 = tok
                    .parse()
                    .map_err(|_| PermError::Parse(format!("bad point `{tok}`")))?;
                if p == 0 {
                    return Err(PermError::Parse("points are 1-based".into()));
                }
                cycle.push(p - 1);
            }
            cycles.push(cycle);
        }
        let max_pt = cycles
            .iter()
            .flat_map(|c| c.iter().copied())
            .max()
            .map(|m| m as usize + 1)
            .unwrap_or(0);
        let degree = max_pt.max(min_degree);
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree, MAX_DEGREE));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in &cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if touched[from as usize] {
                    return Err(PermError::Parse(format!("point {} repeated", from + 1)));
                }
                touched[from as usize] = true;
                images[from as usize] = to;
            }
        }
        Perm::from_images(images)
    }

    /// Canonical cycle notation (1-based); inverse of `parse`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&(p + 1).to_string());
            }
            s.push(')');
        }
        s
    }

    /// Compact byte key for hashing large element sets; width depends on degree.
    pub fn pack(&self) -> Box<[u8]> {
        let n = self.images.len();
        if n <= 1 << 8 {
            self.images.iter().map(|&x| x as u8).collect()
        } else if n <= 1 << 16 {
            let mut out = Vec::with_capacity(2 * n);
            for &x in self.images.iter() {
                out.extend_from_slice(&(x as u16).to_le_bytes());
            }
            out.into_boxed_slice()
        } else {
            let mut out = Vec::with_capacity(4 * n);
            for &x in self.images.iter() {
                out.extend_from_slice(&x.to_le_bytes());
            }
            out.into_boxed_slice()
        }
    }

    pub fn unpack(bytes: &[u8], degree: usize) -> Perm {
        let images: Vec<u32> = if degree <= 1 << 8 {
            bytes.iter().map(|&b| b as u32).collect()
        } else if degree <= 1 << 16 {
            bytes
                .chunks_exact(2)
                .map(|c| u16::from_le_bytes([c[0], c[1]]) as u32)
                .collect()
        } else {
            bytes
                .chunks_exact(4)
                .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
                .collect()
        };
        debug_assert_eq!(images.len(), degree);
        Perm {
            images: images.into_boxed_slice(),
        }
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        let images: Vec<u32> = self
            .images
            .iter()
            .map(|&x| rhs.images[x as usize])
            .collect();
        Perm {
            images: images.into_boxed_slice(),
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.cycle_string())
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

fn lcm_u128(a: u128, b: u128) -> u128 {
    a / gcd_u128(a, b) * b
}
