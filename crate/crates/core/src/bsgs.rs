//! Deterministic Schreier–Sims.
//!
//! Each level stores its base point, the strong generators fixing all
//! earlier base points, and an explicit transversal: for every orbit point
//! `β` the coset representative `u_β` with `base^u_β = β`, with its inverse.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base_point: u32,
    /// Indices into `Bsgs::strong`.
    pub generators: Vec<usize>,
    /// Orbit of the base point, in discovery order.
    pub orbit: Vec<u32>,
    /// Indexed by point: `(u_β, u_β⁻¹)`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    #[inline]
    pub fn rep(&self, point: u32) -> Option<&Permutation> {
        self.transversal[point as usize].as_ref().map(|(u, _)| u)
    }

    #[inline]
    fn rep_inv(&self, point: u32) -> Option<&Permutation> {
        self.transversal[point as usize].as_ref().map(|(_, v)| v)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Bsgs {
    degree: usize,
    pub strong: Vec<Permutation>,
    pub levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Permutation]) -> Bsgs {
        let mut strong: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut bsgs = Bsgs {
            degree,
            strong,
            levels: Vec::new(),
        };
        let mut base: Vec<u32> = Vec::new();
        for g in &bsgs.strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.smallest_moved_point().expect("non-identity"));
            }
        }
        for (i, &b) in base.iter().enumerate() {
            let level = bsgs.make_level(i, b, &base[..i]);
            bsgs.levels.push(level);
        }
        bsgs.complete();
        bsgs
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    fn make_level(&self, _depth: usize, base_point: u32, earlier: &[u32]) -> Level {
        let generators: Vec<usize> = self
            .strong
            .iter()
            .enumerate()
            .filter(|(_, s)| earlier.iter().all(|&b| s.apply(b) == b))
            .map(|(i, _)| i)
            .collect();
        let mut transversal: Vec<Option<(Permutation, Permutation)>> = vec![None; self.degree];
        let id = Permutation::identity(self.degree);
        transversal[base_point as usize] = Some((id.clone(), id));
        let mut orbit = vec![base_point];
        let mut head = 0;
        while head < orbit.len() {
            let beta = orbit[head];
            head += 1;
            for &gi in &generators {
                let s = &self.strong[gi];
                let gamma = s.apply(beta);
                if transversal[gamma as usize].is_none() {
                    let (u, _) = transversal[beta as usize].as_ref().unwrap();
                    let u_gamma = u * s;
                    let inv = u_gamma.inverse();
                    transversal[gamma as usize] = Some((u_gamma, inv));
                    orbit.push(gamma);
                }
            }
        }
        Level {
            base_point,
            generators,
            orbit,
            transversal,
        }
    }

    fn rebuild_level(&mut self, depth: usize) {
        let base: Vec<u32> = self.base();
        let level = self.make_level(depth, base[depth], &base[..depth]);
        self.levels[depth] = level;
    }

    /// Sifts `g` through the levels starting at `from`. Returns the residue
    /// and the index of the first level whose orbit does not contain the
    /// image of its base point (`levels.len()` if every level succeeded).
    pub fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base_point);
            match level.rep_inv(beta) {
                Some(inv) => h = &h * inv,
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (res, j) = self.strip(g, 0);
        j == self.levels.len() && res.is_identity()
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let depth = i as usize;
            match self.find_failing_schreier_generator(depth) {
                None => i -= 1,
                Some((residue, j)) => {
                    self.strong.push(residue.clone());
                    if j == self.levels.len() {
                        let b = residue
                            .smallest_moved_point()
                            .expect("non-identity residue");
                        let base = self.base();
                        let level = self.make_level(j, b, &base);
                        self.levels.push(level);
                    }
                    for l in depth + 1..=j {
                        self.rebuild_level(l);
                    }
                    i = j as isize;
                }
            }
        }
    }

    fn find_failing_schreier_generator(&self, depth: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[depth];
        for &beta in &level.orbit {
            let u = level.rep(beta).unwrap();
            for &gi in &level.generators {
                let s = &self.strong[gi];
                let gamma = s.apply(beta);
                let h = &(u * s) * level.rep_inv(gamma).unwrap();
                if h.is_identity() {
                    continue;
                }
                let (res, j) = self.strip(&h, depth + 1);
                if j < self.levels.len() || !res.is_identity() {
                    return Some((res, j));
                }
            }
        }
        None
    }

    pub fn order(&self) -> Result<u64> {
        self.levels.iter().try_fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64)
                .ok_or(Error::OrderOverflow)
        })
    }

    /// Every element exactly once: products `u_k ⋯ u_1` over all transversal
    /// choices, deepest level leftmost.
    pub fn enumerate(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for x in &out {
                for &beta in &level.orbit {
                    next.push(x * level.rep(beta).unwrap());
                }
            }
            out = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(c: &[&[usize]], n: usize) -> Permutation {
        let cycles: Vec<Vec<usize>> = c.iter().map(|x| x.to_vec()).collect();
        Permutation::from_cycles(&cycles, n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let full: Vec<usize> = (1..=n).collect();
            let gens = vec![cyc(&[&[1, 2]], n), cyc(&[&full], n)];
            let b = Bsgs::new(n, &gens);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(b.order().unwrap(), fact);
            assert_eq!(b.enumerate().len() as u64, fact);
        }
    }

    #[test]
    fn base_starts_at_smallest_moved_point() {
        let gens = vec![cyc(&[&[3, 4, 5]], 6)];
        let b = Bsgs::new(6, &gens);
        assert_eq!(b.base(), vec![2]);
        assert_eq!(b.order().unwrap(), 3);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let b = Bsgs::new(4, &[Permutation::identity(4)]);
        assert_eq!(b.order().unwrap(), 1);
        assert!(b.contains(&Permutation::identity(4)));
        assert!(!b.contains(&cyc(&[&[1, 2]], 4)));
    }
}
