//! Permutations in image-array form.
//!
//! Points are stored 0-based; every user-facing representation (cycles,
//! files, display) is 1-based. Composition follows the right action:
//! `point^(g*h) = (point^g)^h`, so `&g * &h` applies `g` first.

use std::fmt;
use std::ops::Mul;

use crate::arith::lcm;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotBijection);
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation of `degree` points from disjoint 1-based cycles.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if used[pt - 1] {
                    return Err(Error::RepeatedPoint(pt));
                }
                used[pt - 1] = true;
            }
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses whitespace-separated cycle notation such as `(1 2 3)(4 5)`.
    /// The empty string and `()` both denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        Permutation::from_cycles(&cycles, degree)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`, written `self^g` under the right action.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        // point^(g⁻¹ x g): if point = a^g then result is (a^x)^g.
        let mut out = vec![0u32; self.degree()];
        for (a, &ga) in g.images.iter().enumerate() {
            out[ga as usize] = g.images[self.images[a] as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, other: &Permutation) -> Self {
        &(&self.inverse() * &other.inverse()) * &(self * other)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Smallest 0-based point not fixed, if any.
    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                seen[cur] = true;
                cycle.push(cur as u32);
                cur = self.images[cur] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    /// Least `k >= 1` with `self^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Sign-parity test.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Acts on `0..self.degree()` and fixes every point above it.
    pub fn extend_to(&self, degree: usize) -> Self {
        assert!(degree >= self.degree());
        let mut images = self.images.to_vec();
        images.extend(self.degree() as u32..degree as u32);
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Shifts the support by `offset` points inside a larger domain.
    pub fn embed(&self, offset: usize, degree: usize) -> Self {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// `self` first, then `rhs`.
    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: self.images.iter().map(|&x| rhs.images[x as usize]).collect(),
        }
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Splits `(a b c)(d e)` into 1-based cycles without validating the points.
pub(crate) fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let bad = |message: String| Error::Parse { line: 0, message };
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(bad(format!("expected `(` at `{rest}`")));
        };
        let Some(close) = body.find(')') else {
            return Err(bad("unterminated cycle".into()));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(bad("nested `(`".into()));
        }
        let mut cycle = Vec::new();
        for tok in inner.split_whitespace() {
            let pt: usize = tok
                .parse()
                .map_err(|_| bad(format!("`{tok}` is not a point")))?;
            cycle.push(pt);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cycles: &[&[usize]], n: usize) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(&cycles, n).unwrap()
    }

    #[test]
    fn cycles_and_orders() {
        assert!(p(&[], 5).is_identity());
        assert_eq!(p(&[], 5).order(), 1);
        assert_eq!(p(&[&[1, 2, 3]], 3).order(), 3);
        assert_eq!(p(&[&[1, 2], &[3, 4, 5]], 5).order(), 6);
        assert_eq!(p(&[&[1, 2, 3, 4, 5, 6, 7, 8, 9]], 9).order(), 9);
    }

    #[test]
    fn cycle_errors() {
        assert_eq!(
            Permutation::from_cycles(&[vec![1, 6]], 5),
            Err(Error::PointOutOfRange { point: 6, degree: 5 })
        );
        assert_eq!(
            Permutation::from_cycles(&[vec![1, 2], vec![2, 3]], 5),
            Err(Error::RepeatedPoint(2))
        );
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn right_action_convention() {
        let a = p(&[&[1, 2]], 3);
        let b = p(&[&[2, 3]], 3);
        // 1 -> 2 under a, then 2 -> 3 under b.
        assert_eq!((&a * &b).apply(0), 2);
        // (1 2)^(2 3) = (1 3)
        assert_eq!(a.conjugate_by(&b), p(&[&[1, 3]], 3));
        assert_eq!(
            a.conjugate_by(&b),
            &(&b.inverse() * &a) * &b,
            "conjugation is g⁻¹ x g"
        );
    }

    #[test]
    fn display_and_parse() {
        let x = p(&[&[3, 5], &[1, 2, 4]], 6);
        assert_eq!(x.to_string(), "(1 2 4)(3 5)");
        assert_eq!(Permutation::parse_cycles("(1 2 4)(3 5)", 6).unwrap(), x);
        assert_eq!(Permutation::parse_cycles("()", 4).unwrap(), Permutation::identity(4));
        assert!(Permutation::parse_cycles("(1 2", 4).is_err());
        assert!(Permutation::parse_cycles("(1 x)", 4).is_err());
    }

    #[test]
    fn powers_and_inverse() {
        let x = p(&[&[1, 2, 3, 4, 5, 6]], 6);
        assert_eq!(x.pow(6), Permutation::identity(6));
        assert_eq!(&x * &x.inverse(), Permutation::identity(6));
        assert_eq!(x.pow(5), x.inverse());
        assert!(!x.is_even());
        assert!(p(&[&[1, 2, 3]], 3).is_even());
    }
}
