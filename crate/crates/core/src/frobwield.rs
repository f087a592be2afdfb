//! Frobenius groups, 2-Frobenius groups and Frobenius–Wielandt triples.

use std::collections::HashSet;

use serde::Serialize;

use crate::arith::{gcd, prime_divisors};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::structure::{
    intersection, is_normal, normal_subgroups, normalizer, product_order, quotient,
    require_normal, right_transversal, sylow,
};

fn degenerate(g: &Group, h: &Group, l: &Group) -> Option<String> {
    if h.order() == g.order() {
        Some("H = G".into())
    } else if h.is_trivial() {
        Some("H = 1".into())
    } else if l.order() == h.order() {
        Some("L = H".into())
    } else {
        None
    }
}

fn check_shape(g: &Group, h: &Group, l: &Group) -> Result<()> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H is not contained in G".into()));
    }
    if !l.is_subgroup_of(h) {
        return Err(Error::NotSubgroup("L is not contained in H".into()));
    }
    if let Some(why) = degenerate(g, h, l) {
        return Err(Error::Precondition(why));
    }
    Ok(())
}

/// The first transversal element `t` with `H ∩ H^t ⊄ L`, or `None` when
/// `(G, H, L)` is a triple. `L` not normal in `H` is reported as the identity.
pub fn fw_violation(g: &Group, h: &Group, l: &Group) -> Result<Option<Permutation>> {
    check_shape(g, h, l)?;
    if !is_normal(h, l)? {
        return Ok(Some(g.identity()));
    }
    let h_elements = h.elements()?;
    for t in right_transversal(g, h)?.iter().skip(1) {
        let bad = h_elements.iter().any(|x| {
            let y = x.conjugate_by(t);
            h.includes(&y) && !l.includes(&y)
        });
        if bad {
            return Ok(Some(t.clone()));
        }
    }
    Ok(None)
}

/// `L ⊴ H < G`, `1 < H`, `L < H`, and `H ∩ H^g ≤ L` for every `g ∉ H`.
pub fn is_fw_triple(g: &Group, h: &Group, l: &Group) -> Result<bool> {
    Ok(fw_violation(g, h, l)?.is_none())
}

/// Like [`is_fw_triple`], with degenerate shapes counted as `false`.
pub(crate) fn triple_holds(g: &Group, h: &Group, l: &Group) -> Result<bool> {
    match is_fw_triple(g, h, l) {
        Err(Error::Precondition(_)) => Ok(false),
        other => other,
    }
}

/// A validated triple with its kernel `N = G ∖ ⋃ (H ∖ L)^g`.
#[derive(Clone, Debug)]
pub struct FwTriple {
    pub g: Group,
    pub h: Group,
    pub l: Group,
    pub kernel: Group,
}

/// Orders and invariant checks of a triple, as recorded in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleSummary {
    pub g: u64,
    pub h: u64,
    pub l: u64,
    pub kernel: u64,
    pub coprime: bool,
    pub kernel_identities: bool,
}

impl FwTriple {
    pub fn new(g: &Group, h: &Group, l: &Group) -> Result<FwTriple> {
        if let Some(t) = fw_violation(g, h, l)? {
            return Err(Error::Precondition(format!(
                "not a Frobenius-Wielandt triple: H meets H^{t} outside L"
            )));
        }
        let kernel = fw_kernel_unchecked(g, h, l)?;
        Ok(FwTriple {
            g: g.clone(),
            h: h.clone(),
            l: l.clone(),
            kernel,
        })
    }

    pub fn index(&self) -> u64 {
        self.g.order() / self.h.order()
    }

    pub fn is_coprime(&self) -> bool {
        gcd(self.index(), self.h.order() / self.l.order()) == 1
    }

    /// `N ⊴ G`, `G = NH`, `N ∩ H = L` and the element count of `N`.
    pub fn kernel_identities(&self) -> Result<bool> {
        let n = &self.kernel;
        let count = self.g.order() - self.index() * (self.h.order() - self.l.order());
        Ok(n.order() == count
            && is_normal(&self.g, n)?
            && product_order(n, &self.h)? == self.g.order()
            && intersection(n, &self.h)?.same_as(&self.l))
    }

    pub fn summary(&self) -> Result<TripleSummary> {
        Ok(TripleSummary {
            g: self.g.order(),
            h: self.h.order(),
            l: self.l.order(),
            kernel: self.kernel.order(),
            coprime: self.is_coprime(),
            kernel_identities: self.kernel_identities()?,
        })
    }
}

/// The kernel of a triple, with its defining identities asserted.
pub fn fw_kernel(g: &Group, h: &Group, l: &Group) -> Result<Group> {
    Ok(FwTriple::new(g, h, l)?.kernel)
}

fn fw_kernel_unchecked(g: &Group, h: &Group, l: &Group) -> Result<Group> {
    let mut covered: HashSet<Permutation> = HashSet::new();
    let outside_l: Vec<&Permutation> = h.elements()?.iter().filter(|x| !l.includes(x)).collect();
    let transversal = right_transversal(g, h)?;
    for t in &transversal {
        for x in &outside_l {
            covered.insert(x.conjugate_by(t));
        }
    }
    let expected = transversal.len() * outside_l.len();
    if covered.len() != expected {
        return Err(Error::Invariant(format!(
            "conjugates of H \\ L overlap: {} distinct of {expected}",
            covered.len()
        )));
    }
    let rest: Vec<&Permutation> = g.elements()?.iter().filter(|x| !covered.contains(*x)).collect();
    let n = g.subgroup_from_elements(rest.iter().copied());
    let triple = FwTriple {
        g: g.clone(),
        h: h.clone(),
        l: l.clone(),
        kernel: n.clone(),
    };
    if n.order() != rest.len() as u64 || !triple.kernel_identities()? {
        return Err(Error::Invariant(
            "the complement of the conjugates of H \\ L is not a normal subgroup N with G = NH and N ∩ H = L".into(),
        ));
    }
    Ok(n)
}

/// A Frobenius group with its kernel and, when found, a complement.
#[derive(Clone, Debug)]
pub struct FrobeniusDecomposition {
    pub g: Group,
    pub kernel: Group,
    pub complement: Option<Group>,
}

/// A normal chain `K < L < G` with `L` Frobenius with kernel `K` and `G/K`
/// Frobenius with kernel `L/K`.
#[derive(Clone, Debug)]
pub struct TwoFrobeniusDecomposition {
    pub g: Group,
    pub k: Group,
    pub l: Group,
}

/// `1 < K < G`, `K ⊴ G` and no element outside `K` centralizes a nontrivial
/// element of `K`. Conjugacy-class representatives suffice.
pub fn is_frobenius_with_kernel(g: &Group, k: &Group) -> Result<bool> {
    if k.is_trivial() || k.order() == g.order() || !is_normal(g, k)? {
        return Ok(false);
    }
    let elements = g.elements()?;
    let k_elements = k.elements()?;
    for class in g.conjugacy_classes()? {
        let x = &elements[class.representative];
        if k.includes(x) {
            continue;
        }
        if k_elements.iter().any(|y| !y.is_identity() && y.commutes_with(x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Frobenius kernel of `G`, if `G` is a Frobenius group.
pub fn frobenius_kernel(g: &Group) -> Result<Option<FrobeniusDecomposition>> {
    for k in normal_subgroups(g)? {
        if is_frobenius_with_kernel(g, &k)? {
            let complement = find_complement(g, &k)?;
            return Ok(Some(FrobeniusDecomposition {
                g: g.clone(),
                kernel: k,
                complement,
            }));
        }
    }
    Ok(None)
}

/// Searches for a complement to a normal Hall subgroup `K`: Sylow subgroups
/// for the primes of `|G:K|` are added one prime at a time, each conjugated
/// by elements of `K` until the product keeps the expected order.
fn find_complement(g: &Group, k: &Group) -> Result<Option<Group>> {
    let index = g.order() / k.order();
    if gcd(index, k.order()) != 1 {
        return Ok(None);
    }
    let mut current = g.subgroup(&[])?;
    for p in prime_divisors(index) {
        let s = sylow(g, p)?;
        let target = current.order() * s.order();
        let mut found = None;
        for x in k.elements()? {
            let mut gens = current.generators().to_vec();
            gens.extend(s.conjugate(x).generators().iter().cloned());
            let candidate = g.subgroup(&gens)?;
            if candidate.order() == target {
                found = Some(candidate);
                break;
            }
        }
        match found {
            Some(c) => current = c,
            None => return Ok(None),
        }
    }
    Ok(Some(current))
}

/// The first chain `K < L` among the normal subgroups making `G` 2-Frobenius.
pub fn is_2frobenius(g: &Group) -> Result<Option<TwoFrobeniusDecomposition>> {
    let normals = normal_subgroups(g)?;
    for k in normals.iter().filter(|k| !k.is_trivial()) {
        for l in normals.iter() {
            if l.order() <= k.order() || l.order() == g.order() || !k.is_subgroup_of(l) {
                continue;
            }
            if !is_frobenius_with_kernel(l, k)? {
                continue;
            }
            let q = quotient(g, k)?;
            if is_frobenius_with_kernel(q.carrier(), &q.image(l)?)? {
                return Ok(Some(TwoFrobeniusDecomposition {
                    g: g.clone(),
                    k: k.clone(),
                    l: l.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// `H` is a Frobenius complement: `H ∩ H^g = 1` for every `g ∉ H`.
pub fn is_frobenius_complement(g: &Group, h: &Group) -> Result<bool> {
    triple_holds(g, h, &g.subgroup(&[])?)
}

/// Which branch of the normalizer dichotomy an instance falls into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalizerBranch {
    /// `N_G(L) = H`.
    SelfNormalizing,
    /// `N_G(L)/L` is Frobenius with complement `H/L`.
    FrobeniusQuotient,
    /// Neither.
    Violated,
}

/// Evaluates the dichotomy `N_G(L) = H` or `N_G(L)/L` Frobenius with
/// complement `H/L`. Returns the branch and `|N_G(L)|`.
pub fn check_normalizer_quotient(g: &Group, h: &Group, l: &Group) -> Result<(NormalizerBranch, u64)> {
    if !is_fw_triple(g, h, l)? {
        return Err(Error::Precondition("(G, H, L) is not a Frobenius-Wielandt triple".into()));
    }
    let nl = normalizer(g, l)?;
    if nl.same_as(h) {
        return Ok((NormalizerBranch::SelfNormalizing, nl.order()));
    }
    let q = quotient(&nl, l)?;
    let hbar = q.image(h)?;
    let frobenius = frobenius_kernel(q.carrier())?.is_some();
    let complement = is_frobenius_complement(q.carrier(), &hbar)?;
    let branch = if frobenius && complement {
        NormalizerBranch::FrobeniusQuotient
    } else {
        NormalizerBranch::Violated
    };
    Ok((branch, nl.order()))
}

/// Both sides of the conjugacy criterion for `G = HN`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyCriterion {
    /// Every element of `G ∖ N` is conjugate into `H`.
    pub lhs: bool,
    /// `(G, H, H ∩ N)` is a Frobenius–Wielandt triple.
    pub rhs: bool,
    /// An element of `G ∖ N` with no conjugate in `H`.
    pub witness: Option<String>,
    /// When both sides hold: `N_G(H) = H`.
    pub self_normalizing: Option<bool>,
    /// When both sides hold: the conjugates of `H ∖ (H ∩ N)` are disjoint.
    pub disjoint_conjugates: Option<bool>,
}

pub fn check_conjugacy_criterion(g: &Group, h: &Group, n: &Group) -> Result<ConjugacyCriterion> {
    require_normal(g, n, "N")?;
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H is not contained in G".into()));
    }
    if n.order() == g.order() {
        return Err(Error::EmptyComplement);
    }
    if h.order() == g.order() {
        return Err(Error::Precondition("H = G".into()));
    }
    if product_order(h, n)? != g.order() {
        return Err(Error::Precondition("G ≠ HN".into()));
    }
    let elements = g.elements()?;
    let mut witness = None;
    for class in g.conjugacy_classes()? {
        let rep = &elements[class.representative];
        if n.includes(rep) {
            continue;
        }
        if !class.members.iter().any(|&i| h.includes(&elements[i])) {
            witness = Some(rep.to_string());
            break;
        }
    }
    let lhs = witness.is_none();
    let l = intersection(h, n)?;
    let rhs = is_fw_triple(g, h, &l)?;
    let (mut self_normalizing, mut disjoint_conjugates) = (None, None);
    if lhs && rhs {
        self_normalizing = Some(normalizer(g, h)?.same_as(h));
        disjoint_conjugates = Some(match fw_kernel_unchecked(g, h, &l) {
            Ok(_) => true,
            Err(Error::Invariant(_)) => false,
            Err(e) => return Err(e),
        });
    }
    Ok(ConjugacyCriterion {
        lhs,
        rhs,
        witness,
        self_normalizing,
        disjoint_conjugates,
    })
}

/// For `G/N` Frobenius, the preimage `H` of a complement and the triple
/// `(G, H, N)`.
pub fn check_quotient_frobenius_gives_triple(g: &Group, n: &Group) -> Result<FwTriple> {
    let q = quotient(g, n)?;
    let decomposition = frobenius_kernel(q.carrier())?
        .ok_or_else(|| Error::Precondition("G/N is not a Frobenius group".into()))?;
    let complement = decomposition
        .complement
        .ok_or_else(|| Error::Invariant("no complement found in the Frobenius quotient".into()))?;
    let h = q.preimage(&complement);
    FwTriple::new(g, &h, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, cyclic, dihedral, example_g1, lookup, m10, symmetric};
    use crate::structure::derived_subgroup;

    fn s4_parts() -> (Group, Group, Group, Group) {
        let s4 = symmetric(4).unwrap();
        let a4 = derived_subgroup(&s4);
        let v4 = derived_subgroup(&a4);
        let d8 = sylow(&s4, 2).unwrap();
        (s4, a4, v4, d8)
    }

    #[test]
    fn triples() {
        let a4 = alternating(4).unwrap();
        let z3 = sylow(&a4, 3).unwrap();
        let one = a4.subgroup(&[]).unwrap();
        assert!(is_fw_triple(&a4, &z3, &one).unwrap());
        let (s4, a4s, v4, d8) = s4_parts();
        assert!(is_fw_triple(&s4, &d8, &v4).unwrap());
        assert!(!is_fw_triple(&s4, &a4s, &v4).unwrap());
        assert!(matches!(is_fw_triple(&s4, &s4, &v4), Err(Error::Precondition(_))));
        assert!(matches!(is_fw_triple(&s4, &v4, &v4), Err(Error::Precondition(_))));
        assert!(matches!(is_fw_triple(&s4, &v4, &d8), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn kernels() {
        let a4 = alternating(4).unwrap();
        let z3 = sylow(&a4, 3).unwrap();
        let k = fw_kernel(&a4, &z3, &a4.subgroup(&[]).unwrap()).unwrap();
        assert!(k.same_as(&derived_subgroup(&a4)));
        let (s4, a4s, v4, d8) = s4_parts();
        let t = FwTriple::new(&s4, &d8, &v4).unwrap();
        assert!(t.kernel.same_as(&a4s));
        assert!(t.is_coprime());
        assert!(t.kernel_identities().unwrap());
        let m = m10().unwrap();
        let a6 = m.subgroup("A6").unwrap();
        let p = sylow(&m.group, 2).unwrap();
        let l = intersection(&p, a6).unwrap();
        assert!(fw_kernel(&m.group, &p, &l).unwrap().same_as(a6));
    }

    #[test]
    fn frobenius_detection() {
        let s3 = symmetric(3).unwrap();
        let d = frobenius_kernel(&s3).unwrap().unwrap();
        assert_eq!(d.kernel.order(), 3);
        assert_eq!(d.complement.unwrap().order(), 2);
        let a4 = alternating(4).unwrap();
        let d = frobenius_kernel(&a4).unwrap().unwrap();
        assert_eq!((d.kernel.order(), d.complement.unwrap().order()), (4, 3));
        assert!(frobenius_kernel(&symmetric(4).unwrap()).unwrap().is_none());
        let f = lookup("AGL1(8)").unwrap().group;
        let d = frobenius_kernel(&f).unwrap().unwrap();
        assert_eq!((d.kernel.order(), d.complement.unwrap().order()), (8, 7));
        let f = lookup("F52").unwrap().group;
        assert_eq!(frobenius_kernel(&f).unwrap().unwrap().complement.unwrap().order(), 4);
    }

    #[test]
    fn complements_of_mixed_order() {
        let f = crate::catalog::affine(7, 6).unwrap();
        let d = frobenius_kernel(&f).unwrap().unwrap();
        assert_eq!(d.kernel.order(), 7);
        let c = d.complement.unwrap();
        assert_eq!(c.order(), 6);
        assert!(is_frobenius_complement(&f, &c).unwrap());
    }

    #[test]
    fn two_frobenius() {
        let (s4, a4s, v4, _) = s4_parts();
        let d = is_2frobenius(&s4).unwrap().unwrap();
        assert!(d.k.same_as(&v4) && d.l.same_as(&a4s));
        assert!(is_2frobenius(&alternating(4).unwrap()).unwrap().is_none());
        assert!(is_2frobenius(&cyclic(6).unwrap()).unwrap().is_none());
    }

    #[test]
    fn normalizer_dichotomy() {
        let a4 = alternating(4).unwrap();
        let z3 = sylow(&a4, 3).unwrap();
        let one = a4.subgroup(&[]).unwrap();
        let (branch, order) = check_normalizer_quotient(&a4, &z3, &one).unwrap();
        assert_eq!((branch, order), (NormalizerBranch::FrobeniusQuotient, 12));
        let (s4, _, v4, d8) = s4_parts();
        let (branch, order) = check_normalizer_quotient(&s4, &d8, &v4).unwrap();
        assert_eq!((branch, order), (NormalizerBranch::FrobeniusQuotient, 24));
        let g1 = example_g1().unwrap();
        let p1 = g1.subgroup("P1").unwrap();
        let l = intersection(p1, g1.subgroup("N1").unwrap()).unwrap();
        let (branch, _) = check_normalizer_quotient(&g1.group, p1, &l).unwrap();
        assert_ne!(branch, NormalizerBranch::Violated);
    }

    #[test]
    fn conjugacy_criterion() {
        let (s4, a4s, v4, d8) = s4_parts();
        let c = check_conjugacy_criterion(&s4, &d8, &a4s).unwrap();
        assert!(c.lhs && c.rhs);
        assert_eq!((c.self_normalizing, c.disjoint_conjugates), (Some(true), Some(true)));
        assert!(matches!(
            check_conjugacy_criterion(&s4, &a4s, &v4),
            Err(Error::Precondition(_))
        ));
        let m = m10().unwrap();
        let p = sylow(&m.group, 2).unwrap();
        let c = check_conjugacy_criterion(&m.group, &p, m.subgroup("A6").unwrap()).unwrap();
        assert!(c.lhs && c.rhs);
        let d = dihedral(12).unwrap();
        let r = d.subgroup(&[d.generators()[0].pow(2)]).unwrap();
        let c = check_conjugacy_criterion(&d, &sylow(&d, 2).unwrap(), &r).unwrap();
        assert_eq!((c.lhs, c.rhs), (false, false));
        assert!(c.witness.is_some());
    }

    #[test]
    fn quotient_triples() {
        let (s4, _, v4, _) = s4_parts();
        let t = check_quotient_frobenius_gives_triple(&s4, &v4).unwrap();
        assert_eq!(t.h.order(), 8);
        let g1 = example_g1().unwrap();
        let t = check_quotient_frobenius_gives_triple(&g1.group, g1.subgroup("N1").unwrap()).unwrap();
        assert_eq!(t.h.order(), 72);
        let a4 = alternating(4).unwrap();
        let v = derived_subgroup(&a4);
        assert!(matches!(
            check_quotient_frobenius_gives_triple(&a4, &v),
            Err(Error::Precondition(_))
        ));
    }
}
