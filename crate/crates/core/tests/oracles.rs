use std::collections::BTreeSet;

use serde_json::json;

use fwgroup::catalog::{example_g1, example_g2, lookup};
use fwgroup::frobwield::{is_2frobenius, is_fw_triple};
use fwgroup::spectrum::outside_all_prime_power;
use fwgroup::structure::quotient;
use fwgroup::theorems::*;
use fwgroup::Error;

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn g2_triples_and_structure() {
    let g2 = example_g2().unwrap();
    let (g, n, m) = (&g2.group, g2.subgroup("N2").unwrap(), g2.subgroup("M2").unwrap());
    assert_eq!(outside_all_prime_power(g, n).unwrap(), (true, BTreeSet::from([2, 3])));
    assert!(is_fw_triple(g, g2.subgroup("P2").unwrap(), g2.subgroup("L2").unwrap()).unwrap());

    let r = check_thm_triples(g, n).unwrap();
    assert_eq!(r.status, Status::Holds);
    // the residual K coincides with N2 here, so the chain collapses to case 3
    assert_eq!(r.case, Some(3));
    assert_eq!(r.details["k_order"], json!(768));

    let k = g2.subgroup("K").unwrap();
    let r = check_thm_structure(g, k, m, 2, 3).unwrap();
    assert_eq!(r.status, Status::Holds, "{}", r.to_json());
}

#[test]
fn g2_quotients() {
    let g2 = example_g2().unwrap();
    let g = &g2.group;
    let q = quotient(g, g2.subgroup("C1").unwrap()).unwrap();
    assert_eq!(q.order(), 1152);
    assert!(is_2frobenius(q.carrier()).unwrap().is_some());
    let r = check_cor_pq(g, g2.subgroup("N2").unwrap()).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(r.details["quotient_order"], json!(6));
    assert_eq!(r.details["quotient"], json!("frobenius"));
}

#[test]
fn g1_structure_rejects_bad_hypotheses() {
    let g1 = example_g1().unwrap();
    let (g, n, m) = (&g1.group, g1.subgroup("N1").unwrap(), g1.subgroup("M1").unwrap());
    assert!(matches!(check_thm_structure(g, n, m, 3, 2), Err(Error::Precondition(_))));
    assert!(matches!(check_thm_structure(g, n, m, 2, 2), Err(Error::Precondition(_))));
    assert!(matches!(check_thm_structure(g, m, n, 2, 3), Err(Error::Precondition(_))));
}

#[test]
fn s4_conjugacy_example_needs_hn() {
    let s4 = lookup("S4").unwrap();
    let r = check_lemma_conjugacy(&s4.group, s4.subgroup("A4").unwrap(), s4.subgroup("V4").unwrap());
    assert!(matches!(r, Err(Error::Precondition(_))));
}

#[test]
fn classification_examples() {
    let s4 = classify_eppo(&lookup("S4").unwrap().group).unwrap();
    assert_eq!((s4.tag, s4.primes.as_slice()), (EppoTag::TwoFrobeniusPq, &[2, 3][..]));
    let a4 = classify_eppo(&lookup("A4").unwrap().group).unwrap();
    assert_eq!(a4.tag, EppoTag::FrobeniusPq);
    let json = serde_json::to_value(&s4).unwrap();
    assert_eq!(json["tag"], json!("2frobenius-pq"));
    let r = check_classification(&lookup("PSL2(7)").unwrap().group).unwrap();
    assert_eq!((r.claim.as_str(), r.status), ("Thm2.2", Status::Holds));
    assert!(matches!(check_classification(&lookup("C6").unwrap().group), Err(Error::Precondition(_))));
}

#[test]
fn nonsolvable_quotient_by_trivial() {
    let a5 = lookup("A5").unwrap();
    let r = check_thm_nonsolvable(&a5.group, &a5.group.subgroup(&[]).unwrap()).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(r.details["classification"]["fingerprint"], json!("PSL2(4)"));
}

#[test]
fn worked_examples_scan() {
    let reports = scan_corpus(
        &names(&["G1", "G2", "M10", "S4", "A4", "A5"]),
        &ScanOptions { max_order: 5000, ..Default::default() },
    )
    .unwrap();
    let failures: Vec<_> = reports.iter().filter(|r| r.status == Status::Fails).map(|r| r.to_json()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
    for claim in ["Thm4.1", "Thm4.2", "Thm4.3", "Thm4.5", "Cor4.4", "Lem3.1", "Lem3.3", "Cor3.4", "Thm2.1"] {
        assert!(reports.iter().any(|r| r.claim == claim), "no {claim} instance");
    }
}

#[test]
fn small_groups_scan() {
    let small = ["C2", "C3", "C4", "V4", "C5", "C6", "D6", "C7", "C8", "D8", "Q8", "C9", "D10", "A4", "D12", "D14", "D18", "F20", "F21", "S4"];
    let reports = scan_corpus(&names(&small), &ScanOptions::default()).unwrap();
    assert!(reports.iter().all(|r| r.status != Status::Fails));
    assert_eq!(tally(&reports)[2], 0);
}

#[test]
fn scan_output_is_independent_of_workers() {
    let corpus = names(&["G1", "S4", "F21"]);
    let one = scan_corpus(&corpus, &ScanOptions::default()).unwrap();
    let many = scan_corpus(&corpus, &ScanOptions { workers: 3, ..Default::default() }).unwrap();
    let render = |rs: &[VerificationReport]| rs.iter().map(|r| r.to_json()).collect::<Vec<_>>().join("\n");
    assert_eq!(render(&one), render(&many));
}

#[test]
fn unknown_corpus_entry_is_an_error() {
    assert!(scan_corpus(&names(&["S4", "NoSuchGroup"]), &ScanOptions::default()).is_err());
}

#[test]
fn table_lists_every_report() {
    let s4 = lookup("S4").unwrap();
    let r = check_thm_p_power(&s4.group, s4.subgroup("A4").unwrap(), 2).unwrap();
    let table = format_table(&[r.clone(), r]);
    assert_eq!(table.lines().count(), 4);
    assert!(table.ends_with("2 instances: 2 holds, 0 vacuous, 0 fails, 0 skipped\n"));
}
