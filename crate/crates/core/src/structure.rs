//! Normality, closures, series, centralizers, normalizers, Sylow subgroups,
//! quotients and the normal-subgroup lattice.
//!
//! Centralizers, normalizers and intersections are computed by scanning
//! enumerated elements, so they respect the enumeration cap of the group
//! being scanned.

use std::collections::{HashMap, HashSet};

use crate::arith::{is_power_of, is_prime, p_part};
use crate::error::{Error, Result};
use crate::group::{Group, SubgroupHandle};
use crate::perm::Permutation;

fn require_subgroup(g: &Group, h: &Group, what: &str) -> Result<()> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup(format!(
            "{what} (order {}) is not contained in the group of order {}",
            h.order(),
            g.order()
        )));
    }
    Ok(())
}

fn require_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// `h^g ∈ H` for every generator `h` of `H` and `g` of `G`.
pub fn is_normal(g: &Group, h: &Group) -> Result<bool> {
    require_subgroup(g, h, "H")?;
    Ok(normal_unchecked(g, h))
}

pub(crate) fn normal_unchecked(g: &Group, h: &Group) -> bool {
    h.generators()
        .iter()
        .all(|x| g.generators().iter().all(|s| h.includes(&x.conjugate_by(s))))
}

pub(crate) fn require_normal(g: &Group, n: &Group, what: &str) -> Result<()> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal(format!(
            "{what} (order {}) is not normal in the group of order {}",
            n.order(),
            g.order()
        )));
    }
    Ok(())
}

/// Smallest normal subgroup of `G` containing `S`.
pub fn normal_closure(g: &Group, s: &[Permutation]) -> Result<Group> {
    for x in s {
        if !g.contains(x)? {
            return Err(Error::NotSubgroup(format!("{x} is not an element of G")));
        }
    }
    Ok(closure_from(g, g.derive(s)))
}

fn closure_from(g: &Group, start: Group) -> Group {
    let mut gens: Vec<Permutation> = start.generators().to_vec();
    let mut current = start;
    let mut queue: Vec<Permutation> = gens.clone();
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let c = x.conjugate_by(s);
            if !current.includes(&c) {
                gens.push(c.clone());
                current = g.derive(&gens);
                queue.push(c);
            }
        }
    }
    current
}

/// `⟨A, B⟩`.
pub fn join(a: &Group, b: &Group) -> Group {
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    a.derive(&gens)
}

/// Normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &Group) -> Group {
    g.memo("derived", || {
        let gens = g.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        closure_from(g, g.derive(&comms))
    })
}

/// An ascending chain of subgroups, each normal in `top`.
#[derive(Clone, Debug)]
pub struct NormalSeries {
    members: Vec<SubgroupHandle>,
}

impl NormalSeries {
    pub fn new(top: &Group, chain: &[Group]) -> Result<Self> {
        let mut members = Vec::with_capacity(chain.len());
        for (i, h) in chain.iter().enumerate() {
            require_normal(top, h, "series member")?;
            if i > 0 {
                let prev = &chain[i - 1];
                if !prev.is_subgroup_of(h) || prev.order() == h.order() {
                    return Err(Error::Invariant(format!(
                        "series member {i} does not strictly contain its predecessor"
                    )));
                }
            }
            members.push(SubgroupHandle::new(top, h)?);
        }
        Ok(NormalSeries { members })
    }

    pub fn members(&self) -> impl Iterator<Item = &Group> {
        self.members.iter().map(SubgroupHandle::subgroup)
    }

    pub fn orders(&self) -> Vec<u64> {
        self.members().map(Group::order).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The derived series as an ascending normal series ending at `G`. Its first
/// member is trivial exactly when `G` is solvable.
pub fn derived_series(g: &Group) -> NormalSeries {
    let mut chain = vec![g.clone()];
    loop {
        let last = chain.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            break;
        }
        let done = next.is_trivial();
        chain.push(next);
        if done {
            break;
        }
    }
    chain.reverse();
    NormalSeries::new(g, &chain).expect("derived series terms are characteristic")
}

pub fn is_solvable(g: &Group) -> bool {
    g.memo("solvable", || derived_series(g).members().next().unwrap().is_trivial())
}

/// Solvability of `G/N` without building the quotient: some derived term of
/// `G` lies in `N`.
pub fn quotient_is_solvable(g: &Group, n: &Group) -> bool {
    derived_series(g).members().next().unwrap().is_subgroup_of(n)
}

/// `{x ∈ G : xg = gx}`.
pub fn centralizer(g: &Group, x: &Permutation) -> Result<Group> {
    if !g.contains(x)? {
        return Err(Error::NotSubgroup(format!("{x} is not an element of G")));
    }
    let start = [x.clone()];
    let elements = g.elements()?;
    Ok(g.subgroup_from_elements(
        start
            .iter()
            .chain(elements.iter().filter(|y| y.commutes_with(x))),
    ))
}

pub fn center(g: &Group) -> Result<Group> {
    let elements = g.elements()?;
    Ok(g.subgroup_from_elements(
        elements
            .iter()
            .filter(|y| g.generators().iter().all(|s| s.commutes_with(y))),
    ))
}

/// `{x ∈ G : H^x = H}`.
pub fn normalizer(g: &Group, h: &Group) -> Result<Group> {
    require_subgroup(g, h, "H")?;
    let elements = g.elements()?;
    Ok(g.subgroup_from_elements(h.generators().iter().chain(elements.iter().filter(|x| {
        h.generators().iter().all(|y| h.includes(&y.conjugate_by(x)))
    }))))
}

/// `A ∩ B`, scanning the smaller group.
pub fn intersection(a: &Group, b: &Group) -> Result<Group> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            expected: a.degree(),
            found: b.degree(),
        });
    }
    if a.is_subgroup_of(b) {
        return Ok(a.clone());
    }
    if b.is_subgroup_of(a) {
        return Ok(b.clone());
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let elements = small.elements()?;
    Ok(small.subgroup_from_elements(elements.iter().filter(|x| large.includes(x))))
}

/// `|AB| = |A||B| / |A ∩ B|`.
pub fn product_order(a: &Group, b: &Group) -> Result<u64> {
    let i = intersection(a, b)?;
    Ok(a.order() / i.order() * b.order())
}

/// A Sylow `p`-subgroup (the trivial group when `p ∤ |G|`).
pub fn sylow(g: &Group, p: u64) -> Result<Group> {
    require_prime(p)?;
    g.memo_result(&format!("sylow:{p}"), || {
        let target = p_part(g.order(), p);
        if target == 1 {
            return Ok(g.derive(&[]));
        }
        let elements = g.elements()?;
        let orders = g.element_orders()?;
        let mut best: Option<usize> = None;
        for (i, &o) in orders.iter().enumerate() {
            if o > 1 && is_power_of(o, p) && best.is_none_or(|b| orders[b] < o) {
                best = Some(i);
            }
        }
        let start = g.derive(&[elements[best.expect("Cauchy")].clone()]);
        ascend_to_sylow(g, p, start)
    })
}

/// A Sylow `p`-subgroup containing the given `p`-subgroup.
pub fn sylow_containing(g: &Group, p: u64, start: &Group) -> Result<Group> {
    require_prime(p)?;
    require_subgroup(g, start, "start")?;
    if !is_power_of(start.order(), p) {
        return Err(Error::Precondition(format!(
            "starting subgroup of order {} is not a {p}-group",
            start.order()
        )));
    }
    ascend_to_sylow(g, p, start.clone())
}

fn ascend_to_sylow(g: &Group, p: u64, mut current: Group) -> Result<Group> {
    let target = p_part(g.order(), p);
    while current.order() < target {
        let norm = normalizer(g, &current)?;
        let elements = norm.elements()?;
        let orders = norm.element_orders()?;
        let y = elements
            .iter()
            .zip(orders)
            .find(|(y, &o)| is_power_of(o, p) && !current.includes(y))
            .map(|(y, _)| y.clone())
            .ok_or_else(|| Error::Invariant("normalizer ascent stalled".into()))?;
        let mut gens = current.generators().to_vec();
        gens.push(y);
        current = g.derive(&gens);
    }
    Ok(current)
}

/// `O^p(G)`: the subgroup generated by elements of order prime to `p`.
pub fn p_residual(g: &Group, p: u64) -> Result<Group> {
    require_prime(p)?;
    g.memo_result(&format!("residual:{p}"), || {
        let elements = g.elements()?;
        let orders = g.element_orders()?;
        Ok(g.subgroup_from_elements(
            elements
                .iter()
                .zip(orders)
                .filter(|(_, &o)| o % p != 0)
                .map(|(x, _)| x),
        ))
    })
}

/// Right coset representatives of `H` in `G`, starting with the identity.
pub fn right_transversal(g: &Group, h: &Group) -> Result<Vec<Permutation>> {
    require_subgroup(g, h, "H")?;
    let h_elements = h.elements()?;
    let key = |t: &Permutation| -> Permutation {
        h_elements.iter().map(|x| x * t).min().expect("nonempty")
    };
    let index = (g.order() / h.order()) as usize;
    let id = g.identity();
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(key(&id));
    let mut reps = vec![id];
    let mut head = 0;
    while head < reps.len() && reps.len() < index {
        let r = reps[head].clone();
        head += 1;
        for s in g.generators() {
            let t = &r * s;
            if seen.insert(key(&t)) {
                reps.push(t);
            }
        }
    }
    debug_assert_eq!(reps.len(), index);
    Ok(reps)
}

/// `G/N` realized by the action of `G` on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    parent: Group,
    kernel: Group,
    carrier: Group,
    cosets: Option<CosetTable>,
}

#[derive(Clone, Debug)]
struct CosetTable {
    /// Coset index of each parent element, aligned with `parent.elements()`.
    coset_of: Vec<u32>,
    /// `reps[i]` lies in coset `i`; `reps[0]` is the identity.
    reps: Vec<Permutation>,
}

impl QuotientGroup {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn kernel(&self) -> &Group {
        &self.kernel
    }

    /// The faithful permutation image of `G/N`.
    pub fn carrier(&self) -> &Group {
        &self.carrier
    }

    pub fn order(&self) -> u64 {
        self.carrier.order()
    }

    /// Image of a parent element.
    pub fn project(&self, x: &Permutation) -> Result<Permutation> {
        let Some(table) = &self.cosets else {
            return Ok(x.clone());
        };
        let index = self.parent.element_index()?;
        let pos = |y: &Permutation| -> Result<u32> {
            index
                .get(y)
                .map(|&i| table.coset_of[i as usize])
                .ok_or_else(|| Error::NotSubgroup(format!("{x} is not an element of G")))
        };
        let images: Result<Vec<u32>> = table.reps.iter().map(|r| pos(&(r * x))).collect();
        Ok(Permutation::from_images_unchecked(images?))
    }

    /// A parent element mapping to `c`.
    pub fn lift(&self, c: &Permutation) -> Permutation {
        match &self.cosets {
            None => c.clone(),
            Some(table) => table.reps[c.apply(0) as usize].clone(),
        }
    }

    /// Image `HN/N` of a subgroup of the parent.
    pub fn image(&self, h: &Group) -> Result<Group> {
        let gens: Result<Vec<Permutation>> = h.generators().iter().map(|x| self.project(x)).collect();
        Ok(self.carrier.derive(&gens?))
    }

    /// Full preimage of a subgroup of the carrier.
    pub fn preimage(&self, hbar: &Group) -> Group {
        let mut gens = self.kernel.generators().to_vec();
        gens.extend(hbar.generators().iter().map(|c| self.lift(c)));
        self.parent.derive(&gens)
    }
}

pub fn quotient(g: &Group, n: &Group) -> Result<QuotientGroup> {
    require_normal(g, n, "N")?;
    if n.is_trivial() {
        return Ok(QuotientGroup {
            parent: g.clone(),
            kernel: n.clone(),
            carrier: g.clone(),
            cosets: None,
        });
    }
    let elements = g.elements()?;
    let index = g.element_index()?;
    let n_elements = n.elements()?;
    let mut coset_of = vec![u32::MAX; elements.len()];
    let mut reps = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        if coset_of[i] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x.clone());
        for m in n_elements {
            coset_of[index[&(m * x)] as usize] = id;
        }
    }
    // Elements are listed identity-first, so coset 0 is N itself.
    debug_assert!(reps[0].is_identity());
    let table = CosetTable { coset_of, reps };
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|s| {
            Permutation::from_images_unchecked(
                table
                    .reps
                    .iter()
                    .map(|r| table.coset_of[index[&(r * s)] as usize])
                    .collect(),
            )
        })
        .collect();
    let carrier = Group::build(table.reps.len(), &gens, g.limits())?;
    Ok(QuotientGroup {
        parent: g.clone(),
        kernel: n.clone(),
        carrier,
        cosets: Some(table),
    })
}

/// Which conjugacy classes of `G` a normal subgroup contains.
fn class_signature(g: &Group, x: &Group) -> Result<Vec<bool>> {
    let elements = g.elements()?;
    Ok(g.conjugacy_classes()?
        .iter()
        .map(|c| x.includes(&elements[c.representative]))
        .collect())
}

/// All normal subgroups, by order: joins of normal closures of classes.
pub fn normal_subgroups(g: &Group) -> Result<Vec<Group>> {
    g.memo_result("normal_subgroups", || {
        let elements = g.elements()?;
        let classes = g.conjugacy_classes()?;
        let mut found: Vec<Group> = Vec::new();
        let mut seen: HashMap<Vec<bool>, usize> = HashMap::new();
        for c in classes {
            let closure = closure_from(g, g.derive(&[elements[c.representative].clone()]));
            let sig = class_signature(g, &closure)?;
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(sig) {
                e.insert(found.len());
                found.push(closure);
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let joined = join(&found[i], &found[j]);
                let sig = class_signature(g, &joined)?;
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(sig) {
                    e.insert(found.len());
                    found.push(joined);
                }
            }
            i += 1;
        }
        found.sort_by_key(Group::order);
        Ok(found)
    })
}
