use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use crate::arith::prime_divisors;
use crate::catalog::{resolve_group, LabeledGroup};
use crate::error::{Error, Result};
use crate::frobwield::triple_holds;
use crate::group::{Group, Limits};
use crate::spectrum::is_eppo;
use crate::structure::{intersection, join, normal_subgroups, product_order, sylow};

use super::report::VerificationReport;
use super::verifiers::*;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub max_order: u64,
    pub limits: Limits,
    pub workers: usize,
    pub timing: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            max_order: 2000,
            limits: Limits::default(),
            workers: 1,
            timing: false,
        }
    }
}

/// Appends the outcome of one verifier run. Unmet preconditions are dropped,
/// cap overruns become skip reports and other errors become failures.
fn push(out: &mut Vec<VerificationReport>, claim: &str, instance: &str, result: Result<VerificationReport>) {
    match result {
        Ok(r) => {
            let full = format!("{instance} {}", r.instance);
            out.push(r.with_instance(full));
        }
        Err(Error::Precondition(_) | Error::EmptyComplement | Error::NotNormal(_) | Error::NotSubgroup(_)) => {}
        Err(e @ (Error::CapExceeded { .. } | Error::DegreeCapExceeded { .. })) => {
            out.push(VerificationReport::skipped(claim, instance, &e))
        }
        Err(e) => {
            let mut r = VerificationReport::new(claim, instance);
            r.fail(json!({ "error": e.to_string() }));
            out.push(r);
        }
    }
}

/// Candidate `H` with `G = HN`, `H < G`: Sylow subgroups and their products
/// with normal subgroups of `G` inside `N`.
fn conjugacy_candidates(g: &Group, n: &Group, normals: &[Group]) -> Result<Vec<Group>> {
    let mut out: Vec<Group> = Vec::new();
    for p in prime_divisors(g.order()) {
        let pp = sylow(g, p)?;
        for m in normals.iter().filter(|m| m.is_subgroup_of(n)) {
            let h = join(&pp, m);
            if h.order() < g.order()
                && product_order(&h, n)? == g.order()
                && !out.iter().any(|x| x.same_as(&h))
            {
                out.push(h);
            }
        }
    }
    Ok(out)
}

fn scan_pair(g: &Group, n: &Group, tag: &str, normals: &[Group]) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let primes = prime_divisors(g.order());
    for &p in &primes {
        push(&mut out, "Thm4.1", tag, check_thm_p_power(g, n, p));
        let lemma = sylow(g, p).and_then(|pp| {
            let l = intersection(&pp, n)?;
            if triple_holds(g, &pp, &l)? {
                check_lemma_normalizer(g, &pp, &l)
            } else {
                Err(Error::Precondition("not a triple".into()))
            }
        });
        push(&mut out, "Lem3.1", tag, lemma);
    }
    push(&mut out, "Thm4.2", tag, check_thm_triples(g, n));
    push(&mut out, "Thm4.5", tag, check_thm_nonsolvable(g, n));
    push(&mut out, "Cor4.4", tag, check_cor_pq(g, n));
    push(&mut out, "Thm1.3", tag, check_thm_many_primes(g, n));
    push(&mut out, "Cor3.4", tag, check_cor_quotient_triple(g, n));
    match conjugacy_candidates(g, n, normals) {
        Ok(hs) => {
            for h in hs {
                push(&mut out, "Lem3.3", tag, check_lemma_conjugacy(g, &h, n));
            }
        }
        Err(e) => push(&mut out, "Lem3.3", tag, Err(e)),
    }
    for m in normals.iter().filter(|m| n.is_subgroup_of(m) && !m.same_as(n) && m.order() < g.order()) {
        for &p in prime_divisors(g.order() / m.order()).iter() {
            for &q in prime_divisors(m.order() / n.order()).iter().filter(|&&q| q != p) {
                push(&mut out, "Thm4.3", tag, check_thm_structure(g, n, m, p, q));
            }
        }
    }
    out
}

/// Runs every applicable verifier on `G` and each normal `N < G`. Reports
/// come back ordered by normal subgroup, then claim.
pub fn scan_group(group: &LabeledGroup, options: &ScanOptions) -> Vec<VerificationReport> {
    let name = &group.name;
    let g = group.group.relimit(options.limits);
    if g.order() > options.max_order {
        let e = Error::CapExceeded { order: g.order(), cap: options.max_order as usize };
        return vec![VerificationReport::skipped("scan", name.as_str(), &e)];
    }
    let normals = match normal_subgroups(&g) {
        Ok(ns) => ns,
        Err(e) => {
            let mut out = Vec::new();
            push(&mut out, "scan", name, Err(e));
            return out;
        }
    };
    let pairs: Vec<(usize, &Group)> = normals
        .iter()
        .enumerate()
        .filter(|(_, n)| n.order() < g.order())
        .collect();
    let mut reports = Vec::new();
    if matches!(is_eppo(&g), Ok(true)) {
        push(&mut reports, "Thm2.1", name, check_classification(&g));
    }
    let per_pair: Vec<Vec<VerificationReport>> = pairs
        .par_iter()
        .map(|&(i, n)| {
            let start = Instant::now();
            let tag = format!("{name} N{i}");
            let mut rs = scan_pair(&g, n, &tag, &normals);
            if options.timing {
                let ms = start.elapsed().as_millis() as u64;
                rs.iter_mut().for_each(|r| r.elapsed_ms = Some(ms));
            }
            rs
        })
        .collect();
    reports.extend(per_pair.into_iter().flatten());
    reports
}

/// Resolves each corpus entry and scans it on a pool of `options.workers`
/// threads. Output order depends only on the corpus.
pub fn scan_corpus(names: &[String], options: &ScanOptions) -> Result<Vec<VerificationReport>> {
    let groups = names
        .iter()
        .map(|n| resolve_group(n))
        .collect::<Result<Vec<_>>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(pool.install(|| {
        groups
            .par_iter()
            .map(|g| scan_group(g, options))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::{tally, Status};

    #[test]
    fn small_corpus_has_no_failures() {
        let names: Vec<String> = ["S4", "A4", "D8", "C6", "Q8", "S3"].iter().map(|s| s.to_string()).collect();
        let reports = scan_corpus(&names, &ScanOptions::default()).unwrap();
        let bad: Vec<_> = reports.iter().filter(|r| r.status == Status::Fails).collect();
        assert!(bad.is_empty(), "{}", bad[0].to_json());
        assert!(tally(&reports)[0] > 0);
    }

    #[test]
    fn empty_corpus() {
        assert!(scan_corpus(&[], &ScanOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let names: Vec<String> = ["S4", "F20"].iter().map(|s| s.to_string()).collect();
        let one = scan_corpus(&names, &ScanOptions::default()).unwrap();
        let four = scan_corpus(&names, &ScanOptions { workers: 4, ..Default::default() }).unwrap();
        let render = |rs: &[VerificationReport]| rs.iter().map(|r| r.to_json()).collect::<Vec<_>>();
        assert_eq!(render(&one), render(&four));
    }

    #[test]
    fn over_cap_is_skipped() {
        let names = vec!["S5".to_string()];
        let rs = scan_corpus(&names, &ScanOptions { max_order: 100, ..Default::default() }).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].status, Status::SkippedCap);
    }
}
