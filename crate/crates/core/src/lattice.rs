//! Exhaustive subgroup enumeration over a Cayley table, for small groups.

use std::collections::HashSet;

use crate::error::Result;
use crate::group::Group;

/// Multiplication and inversion as index tables over [`Group::elements`].
pub struct CayleyTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl CayleyTable {
    pub fn new(g: &Group) -> Result<CayleyTable> {
        let elements = g.elements()?;
        let index = g.element_index()?;
        let n = elements.len();
        let mut mul = vec![0; n * n];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                mul[i * n + j] = index[&(x * y)];
            }
        }
        let inv = elements.iter().map(|x| index[&x.inverse()]).collect();
        Ok(CayleyTable { n, mul, inv })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv[g as usize], x), g)
    }
}

/// A subgroup as a set of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: Vec<u64>,
    members: Vec<u32>,
}

impl ElementSet {
    fn from_members(n: usize, mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        let mut bits = vec![0u64; n.div_ceil(64)];
        for &m in &members {
            bits[m as usize / 64] |= 1 << (m % 64);
        }
        ElementSet { bits, members }
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        self.bits[i as usize / 64] >> (i % 64) & 1 == 1
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

/// `⟨start, extra⟩` where `start` is already closed.
fn close(table: &CayleyTable, start: &[u32], gens: &[u32]) -> ElementSet {
    let mut seen = vec![false; table.len()];
    let mut members: Vec<u32> = Vec::with_capacity(start.len().max(1));
    let mut push = |x: u32, members: &mut Vec<u32>| {
        if !seen[x as usize] {
            seen[x as usize] = true;
            members.push(x);
        }
    };
    push(0, &mut members);
    for &x in start {
        push(x, &mut members);
    }
    let mut head = 0;
    while head < members.len() {
        let x = members[head];
        head += 1;
        for &s in gens {
            push(table.mul(x, s), &mut members);
        }
    }
    ElementSet::from_members(table.len(), members)
}

/// Every subgroup, in discovery order: cyclic subgroups first, then joins.
pub fn all_subgroups(table: &CayleyTable) -> Vec<ElementSet> {
    let mut found: Vec<ElementSet> = Vec::new();
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut cyclic: Vec<(u32, usize)> = Vec::new();
    for x in 0..table.len() as u32 {
        let c = close(table, &[], &[x]);
        if seen.insert(c.bits.clone()) {
            cyclic.push((x, found.len()));
            found.push(c);
            gens.push(vec![x]);
        }
    }
    let mut i = 0;
    while i < found.len() {
        for &(x, ci) in &cyclic {
            if found[ci].is_subset_of(&found[i]) {
                continue;
            }
            let mut g = gens[i].clone();
            g.push(x);
            let joined = close(table, found[i].members(), &g);
            if seen.insert(joined.bits.clone()) {
                found.push(joined);
                gens.push(g);
            }
        }
        i += 1;
    }
    found
}

/// Some proper nontrivial subgroup `H` has `H ∩ H^g = 1` for all `g ∉ H`.
pub fn has_frobenius_complement(table: &CayleyTable, subgroups: &[ElementSet]) -> bool {
    let n = table.len();
    subgroups.iter().any(|h| {
        h.len() > 1
            && h.len() < n
            && (0..n as u32).filter(|&g| !h.contains(g)).all(|g| {
                h.members()
                    .iter()
                    .skip(1)
                    .all(|&x| !h.contains(table.conj(x, g)))
            })
    })
}
