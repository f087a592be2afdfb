use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::json;

use crate::arith::{is_power_of, is_prime, is_prime_power, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::frobwield::{
    check_conjugacy_criterion, check_normalizer_quotient, check_quotient_frobenius_gives_triple,
    frobenius_kernel, is_2frobenius, is_frobenius_complement, is_frobenius_with_kernel,
    NormalizerBranch,
};
use crate::group::Group;
use crate::perm::Permutation;
use crate::spectrum::{is_eppo, outside_all_p_power, outside_all_prime_power};
use crate::structure::{
    intersection, is_normal, join, normalizer, p_residual, product_order, quotient,
    quotient_is_solvable, require_normal, sylow, sylow_containing,
};

use super::classify::{classify_eppo, EppoTag};
use super::report::{describe, VerificationReport};

fn require_proper_normal(g: &Group, n: &Group) -> Result<()> {
    require_normal(g, n, "N")?;
    if n.order() == g.order() {
        return Err(Error::EmptyComplement);
    }
    Ok(())
}

fn require_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// An element of `G ∖ N` whose order fails `ok`.
fn outside_witness(g: &Group, n: &Group, ok: impl Fn(u64) -> bool) -> Result<Option<(Permutation, u64)>> {
    let elements = g.elements()?;
    let orders = g.element_orders()?;
    Ok(elements
        .iter()
        .zip(orders)
        .find(|(x, &o)| !ok(o) && !n.includes(x))
        .map(|(x, &o)| (x.clone(), o)))
}

fn witness_json(w: Option<(Permutation, u64)>) -> serde_json::Value {
    match w {
        Some((x, o)) => json!({ "element": x.to_string(), "order": o }),
        None => json!({ "element": null }),
    }
}

/// All elements of `G ∖ N` have `p`-power order iff `G` is a `p`-group, or
/// `G = PN` and `(G, P, P ∩ N)` is a triple for a Sylow `p`-subgroup `P`.
pub fn check_thm_p_power(g: &Group, n: &Group, p: u64) -> Result<VerificationReport> {
    require_prime(p)?;
    require_proper_normal(g, n)?;
    let mut r = VerificationReport::new("Thm4.1", format!("{} p={p}", describe(g, n)));
    let lhs = outside_all_p_power(g, n, p)?;
    let pp = sylow(g, p)?;
    let mut rhs = false;
    if is_power_of(g.order(), p) {
        rhs = true;
        r.case = Some(1);
    } else if product_order(&pp, n)? == g.order() {
        let l = intersection(&pp, n)?;
        r.detail("sylow_order", pp.order());
        r.detail("intersection_order", l.order());
        if r.triple(g, &pp, &l)? {
            rhs = true;
            r.case = Some(2);
        }
    } else {
        r.detail("product_order", product_order(&pp, n)?);
    }
    let witness = if lhs { None } else { outside_witness(g, n, |o| is_power_of(o, p))? };
    r.set_iff(lhs, rhs, || {
        if lhs {
            json!({ "sylow_order": pp.order(), "reason": "outside elements are p-elements but no case applies" })
        } else {
            witness_json(witness.clone())
        }
    });
    if let Some((x, o)) = witness {
        r.detail("lhs_witness", json!({ "element": x.to_string(), "order": o }));
    }
    Ok(r)
}

/// Which of the four alternatives a construction satisfied.
struct Construction {
    case: u8,
    p: u64,
    q: Option<u64>,
    m: u64,
    k: Option<u64>,
}

fn triples_rhs(r: &mut VerificationReport, g: &Group, n: &Group) -> Result<Option<Construction>> {
    if is_prime_power(g.order()) {
        return Ok(Some(Construction { case: 1, p: prime_divisors(g.order()).first().copied().unwrap_or(1), q: None, m: g.order(), k: None }));
    }
    for p in prime_divisors(g.order() / n.order()) {
        let m = join(n, &p_residual(g, p)?);
        if m.order() == g.order() {
            continue;
        }
        let pp = sylow(g, p)?;
        if m.same_as(n) {
            if product_order(&pp, n)? == g.order() && r.triple(g, &pp, &intersection(&pp, n)?)? {
                return Ok(Some(Construction { case: 2, p, q: None, m: m.order(), k: None }));
            }
            continue;
        }
        let g_is_mp = product_order(&m, &pp)? == g.order();
        for q in prime_divisors(m.order() / n.order()) {
            if q == p {
                continue;
            }
            let k = join(n, &p_residual(&m, q)?);
            if k.order() == m.order() {
                continue;
            }
            let qq = sylow(g, q)?;
            if k.same_as(n) {
                let a = g_is_mp && product_order(n, &qq)? == m.order();
                let b = a && r.triple(g, &pp, &intersection(&pp, &m)?)?;
                let c = b && (m.same_as(&qq) || r.triple(&m, &qq, &intersection(&qq, n)?)?);
                if c {
                    return Ok(Some(Construction { case: 3, p, q: Some(q), m: m.order(), k: Some(k.order()) }));
                }
            } else {
                let kp = intersection(&k, &pp)?;
                let a = g_is_mp
                    && product_order(n, &kp)? == k.order()
                    && product_order(&k, &qq)? == m.order();
                let b = a
                    && r.triple(g, &pp, &intersection(&pp, &m)?)?
                    && r.triple(&m, &qq, &intersection(&qq, &k)?)?;
                let c = b && (k.is_subgroup_of(&pp) || r.triple(&k, &kp, &intersection(&pp, n)?)?);
                if c {
                    return Ok(Some(Construction { case: 4, p, q: Some(q), m: m.order(), k: Some(k.order()) }));
                }
            }
        }
    }
    Ok(None)
}

/// For `G/N` solvable: all elements of `G ∖ N` have prime-power order iff
/// one of the four iterated-triple configurations occurs.
pub fn check_thm_triples(g: &Group, n: &Group) -> Result<VerificationReport> {
    require_proper_normal(g, n)?;
    if !quotient_is_solvable(g, n) {
        return Err(Error::Precondition("G/N is not solvable; use Thm4.5".into()));
    }
    let mut r = VerificationReport::new("Thm4.2", describe(g, n));
    let (lhs, primes) = outside_all_prime_power(g, n)?;
    r.detail("outside_primes", &primes);
    let construction = triples_rhs(&mut r, g, n)?;
    if let Some(c) = &construction {
        r.case = Some(c.case);
        r.detail("p", c.p);
        r.detail("m_order", c.m);
        if let Some(q) = c.q {
            r.detail("q", q);
        }
        if let Some(k) = c.k {
            r.detail("k_order", k);
        }
    }
    let rhs = construction.is_some();
    let witness = if lhs { None } else { outside_witness(g, n, is_prime_power)? };
    r.set_iff(lhs, rhs, || {
        if lhs {
            json!({ "reason": "no configuration matched", "outside_primes": primes })
        } else {
            witness_json(witness.clone())
        }
    });
    Ok(r)
}

#[derive(Serialize)]
struct Conclusion {
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn conclusion(r: &mut VerificationReport, index: u8, holds: bool, note: Option<String>) {
    r.detail(&format!("conclusion_{index}"), Conclusion { holds, note: note.clone() });
    if !holds {
        r.fail(json!({ "conclusion": index, "note": note }));
    }
}

/// Checks the six structural conclusions for `G = MP`, `M = NQ` with
/// `(G, P, P ∩ M)` and `(M, Q, Q ∩ N)` triples. Hypothesis failures are
/// precondition errors.
pub fn check_thm_structure(g: &Group, n: &Group, m: &Group, p: u64, q: u64) -> Result<VerificationReport> {
    require_prime(p)?;
    require_prime(q)?;
    if p == q {
        return Err(Error::Precondition("p = q".into()));
    }
    require_normal(g, n, "N")?;
    require_normal(g, m, "M")?;
    if !n.is_subgroup_of(m) {
        return Err(Error::Precondition("N is not contained in M".into()));
    }
    let pp = sylow(g, p)?;
    let qq = sylow(m, q)?;
    if qq.order() != p_part(g.order(), q) {
        return Err(Error::Precondition("M contains no Sylow q-subgroup of G".into()));
    }
    if product_order(m, &pp)? != g.order() {
        return Err(Error::Precondition("G ≠ MP".into()));
    }
    if product_order(n, &qq)? != m.order() {
        return Err(Error::Precondition("M ≠ NQ".into()));
    }
    let mut r = VerificationReport::new(
        "Thm4.3",
        format!("{} |M|={} p={p} q={q}", describe(g, n), m.order()),
    );
    if !r.triple(g, &pp, &intersection(&pp, m)?)? {
        return Err(Error::Precondition("(G, P, P ∩ M) is not a Frobenius-Wielandt triple".into()));
    }
    let qn = intersection(&qq, n)?;
    if !r.triple(m, &qq, &qn)? {
        return Err(Error::Precondition("(M, Q, Q ∩ N) is not a Frobenius-Wielandt triple".into()));
    }

    let ngq = normalizer(g, &qq)?;
    r.detail("normalizer_q_order", ngq.order());
    conclusion(&mut r, 1, is_frobenius_with_kernel(&ngq, &qq)?, None);

    let quo = quotient(g, n)?;
    let c2 = is_frobenius_with_kernel(quo.carrier(), &quo.image(m)?)?;
    conclusion(&mut r, 2, c2, Some(format!("|G/N| = {}", quo.order())));

    let p_ngq = sylow(&ngq, p)?;
    let p_adj = sylow_containing(g, p, &p_ngq)?;
    let npq = intersection(&p_adj, &ngq)?;
    let np = intersection(n, &p_adj)?;
    let c3 = npq.order() == p_ngq.order()
        && is_frobenius_complement(&ngq, &npq)?
        && is_normal(&p_adj, &np)?
        && intersection(&np, &npq)?.is_trivial()
        && np.order() * npq.order() == p_adj.order();
    conclusion(&mut r, 3, c3, Some(format!("|N_P(Q)| = {}", npq.order())));

    let opn = p_residual(n, p)?;
    if opn.order() < n.order() {
        let q4 = quotient(g, &opn)?;
        let c4 = is_2frobenius(q4.carrier())?.is_some();
        conclusion(&mut r, 4, c4, Some(format!("|O^p(N)| = {}", opn.order())));
    } else {
        conclusion(&mut r, 4, true, Some("O^p(N) = N".into()));
    }

    let nqn = normalizer(g, &qn)?;
    if nqn.same_as(&ngq) {
        conclusion(&mut r, 5, true, Some("N_G(Q ∩ N) = N_G(Q)".into()));
    } else {
        let q5 = quotient(&nqn, &qn)?;
        let c5 = is_2frobenius(q5.carrier())?.is_some();
        conclusion(&mut r, 5, c5, Some(format!("|N_G(Q ∩ N)| = {}", nqn.order())));
    }

    let primes = prime_divisors(g.order());
    let c6 = primes.iter().all(|&s| s == p || s == q);
    conclusion(&mut r, 6, c6, Some(format!("primes {primes:?}")));
    Ok(r)
}

fn quotient_shape(g: &Group, n: &Group) -> Result<(bool, bool, u64)> {
    let quo = quotient(g, n)?;
    let frobenius = frobenius_kernel(quo.carrier())?.is_some();
    let two = !frobenius && is_2frobenius(quo.carrier())?.is_some();
    Ok((frobenius, two, quo.order()))
}

/// Two primes outside `N`: `G/N` is Frobenius or 2-Frobenius and `G` is a
/// `{p, q}`-group.
pub fn check_cor_pq(g: &Group, n: &Group) -> Result<VerificationReport> {
    require_proper_normal(g, n)?;
    let (all, primes) = outside_all_prime_power(g, n)?;
    if !all || primes.len() != 2 {
        return Err(Error::Precondition(format!(
            "needs prime-power orders outside N over exactly two primes, found {primes:?}"
        )));
    }
    let mut r = VerificationReport::new("Cor4.4", describe(g, n));
    r.detail("outside_primes", &primes);
    let (frobenius, two, order) = quotient_shape(g, n)?;
    r.detail("quotient_order", order);
    r.detail("quotient", if frobenius { "frobenius" } else if two { "2-frobenius" } else { "neither" });
    if !frobenius && !two {
        r.fail(json!({ "quotient_order": order, "reason": "G/N is neither Frobenius nor 2-Frobenius" }));
    }
    let group_primes: BTreeSet<u64> = prime_divisors(g.order()).into_iter().collect();
    r.detail("group_primes", &group_primes);
    if !group_primes.is_subset(&primes) {
        let extra: Vec<u64> = group_primes.difference(&primes).copied().collect();
        r.fail(json!({ "extra_primes": extra }));
    }
    Ok(r)
}

/// For `G/N` nonsolvable: prime-power orders outside `N` iff throughout `G`.
pub fn check_thm_nonsolvable(g: &Group, n: &Group) -> Result<VerificationReport> {
    require_normal(g, n, "N")?;
    if quotient_is_solvable(g, n) {
        return Err(Error::Precondition("G/N is solvable; use Thm4.2".into()));
    }
    let mut r = VerificationReport::new("Thm4.5", describe(g, n));
    let lhs = outside_all_prime_power(g, n)?.0;
    let rhs = is_eppo(g)?;
    let trivial = g.subgroup(&[])?;
    let witness = outside_witness(g, if lhs { &trivial } else { n }, is_prime_power)?;
    r.set_iff(lhs, rhs, || witness_json(witness.clone()));
    if lhs {
        classification(&mut r, g)?;
    }
    Ok(r)
}

fn classification(r: &mut VerificationReport, g: &Group) -> Result<()> {
    match classify_eppo(g) {
        Ok(c) => {
            r.detail("classification", &c);
            if c.tag != EppoTag::NonsolvableListed {
                r.fail(json!({ "classification": c }));
            }
        }
        Err(Error::ClassificationGap(why)) => {
            r.detail("classification", "gap");
            r.fail(json!({ "classification_gap": why }));
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

/// Three or more primes outside `N`: `G` has only prime-power orders and is
/// one of the listed nonsolvable groups.
pub fn check_thm_many_primes(g: &Group, n: &Group) -> Result<VerificationReport> {
    require_proper_normal(g, n)?;
    let (all, primes) = outside_all_prime_power(g, n)?;
    if !all || primes.len() < 3 {
        return Err(Error::Precondition(format!(
            "needs prime-power orders outside N over at least three primes, found {primes:?}"
        )));
    }
    let mut r = VerificationReport::new("Thm1.3", describe(g, n));
    r.detail("outside_primes", &primes);
    if let Some((x, o)) = outside_witness(g, &g.subgroup(&[])?, is_prime_power)? {
        r.fail(json!({ "element": x.to_string(), "order": o }));
        return Ok(r);
    }
    classification(&mut r, g)?;
    Ok(r)
}

/// Classification of an EPPO group: the solvable trichotomy or a stored
/// nonsolvable fingerprint.
pub fn check_classification(g: &Group) -> Result<VerificationReport> {
    let solvable = crate::structure::is_solvable(g);
    let claim = if solvable { "Thm2.1" } else { "Thm2.2" };
    let mut r = VerificationReport::new(claim, format!("|G|={}", g.order()));
    match classify_eppo(g) {
        Ok(c) if c.tag == EppoTag::NotEppo => {
            return Err(Error::Precondition("G has an element of non-prime-power order".into()))
        }
        Ok(c) => r.detail("classification", &c),
        Err(Error::ClassificationGap(why)) => r.fail(json!({ "classification_gap": why })),
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// The normalizer dichotomy for a triple.
pub fn check_lemma_normalizer(g: &Group, h: &Group, l: &Group) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(
        "Lem3.1",
        format!("|G|={} |H|={} |L|={}", g.order(), h.order(), l.order()),
    );
    let (branch, order) = check_normalizer_quotient(g, h, l)?;
    r.detail("normalizer_order", order);
    r.detail("branch", &branch);
    if branch == NormalizerBranch::Violated {
        r.fail(json!({ "normalizer_order": order }));
    }
    Ok(r)
}

/// The conjugacy criterion for `G = HN`.
pub fn check_lemma_conjugacy(g: &Group, h: &Group, n: &Group) -> Result<VerificationReport> {
    let c = check_conjugacy_criterion(g, h, n)?;
    let mut r = VerificationReport::new(
        "Lem3.3",
        format!("{} |H|={}", describe(g, n), h.order()),
    );
    r.set_iff(c.lhs, c.rhs, || json!({ "lhs_witness": c.witness }));
    if c.lhs && c.rhs {
        r.triple(g, h, &intersection(h, n)?)?;
        if c.self_normalizing != Some(true) {
            r.fail(json!({ "reason": "N_G(H) ≠ H" }));
        }
        if c.disjoint_conjugates != Some(true) {
            r.fail(json!({ "reason": "conjugates of H \\ (H ∩ N) overlap" }));
        }
    }
    r.detail("criterion", &c);
    Ok(r)
}

/// A Frobenius quotient `G/N` pulls back to a triple `(G, H, N)`.
pub fn check_cor_quotient_triple(g: &Group, n: &Group) -> Result<VerificationReport> {
    let t = check_quotient_frobenius_gives_triple(g, n)?;
    let mut r = VerificationReport::new("Cor3.4", describe(g, n));
    r.detail("h_order", t.h.order());
    r.record_triple(&t)?;
    Ok(r)
}

/// A Frobenius subgroup `Z_k ⋊ Z_c` to look for; `c = 2` is the dihedral
/// group of order `2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessSpec {
    pub kernel: u64,
    pub complement: u64,
}

impl WitnessSpec {
    pub fn dihedral(order: u64) -> Self {
        WitnessSpec { kernel: order / 2, complement: 2 }
    }

    pub fn frobenius(kernel: u64, complement: u64) -> Self {
        WitnessSpec { kernel, complement }
    }

    pub fn label(&self) -> String {
        if self.complement == 2 {
            format!("D{}", 2 * self.kernel)
        } else {
            format!("F{}", self.kernel * self.complement)
        }
    }
}

/// Elements `x` of order `k` and `y` of order `c` with `⟨x, y⟩` Frobenius of
/// order `kc` with kernel `⟨x⟩`. Only class representatives are tried for `x`.
pub fn find_frobenius_pair(g: &Group, spec: WitnessSpec) -> Result<Option<(Permutation, Permutation)>> {
    let elements = g.elements()?;
    let orders = g.element_orders()?;
    for class in g.conjugacy_classes()? {
        if class.element_order != spec.kernel {
            continue;
        }
        let x = &elements[class.representative];
        let powers: Vec<Permutation> = (1..spec.kernel).map(|e| x.pow(e)).collect();
        for (y, &o) in elements.iter().zip(orders) {
            if o != spec.complement {
                continue;
            }
            let xy = x.conjugate_by(y);
            if xy == *x || !powers.contains(&xy) {
                continue;
            }
            let h = g.subgroup(&[x.clone(), y.clone()])?;
            if h.order() == spec.kernel * spec.complement
                && is_frobenius_with_kernel(&h, &h.subgroup(std::slice::from_ref(x))?)?
            {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// Looks for each listed Frobenius subgroup by an explicit generating pair.
pub fn check_dihedral_witnesses(g: &Group, specs: &[WitnessSpec]) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("Thm4.5.witnesses", format!("|G|={}", g.order()));
    let mut missing = Vec::new();
    for &spec in specs {
        match find_frobenius_pair(g, spec)? {
            Some((x, y)) => r.detail(&spec.label(), json!({ "found": true, "x": x.to_string(), "y": y.to_string() })),
            None => {
                r.detail(&spec.label(), json!({ "found": false }));
                missing.push(spec.label());
            }
        }
    }
    if !missing.is_empty() {
        r.fail(json!({ "missing": missing }));
    }
    Ok(r)
}
