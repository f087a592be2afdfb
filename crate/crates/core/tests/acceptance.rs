//! Acceptance gate. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any is red.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fwgroup::catalog::{example_g1, example_g2, lookup, m10, two_frobenius_1152, BUNDLED_CORPUS};
use fwgroup::frobwield::{frobenius_kernel, is_2frobenius, is_frobenius_with_kernel, FwTriple};
use fwgroup::lattice::{all_subgroups, has_frobenius_complement, CayleyTable};
use fwgroup::spectrum::{outside_all_p_power, outside_all_prime_power, outside_spectrum};
use fwgroup::structure::{is_solvable, quotient};
use fwgroup::theorems::{
    check_dihedral_witnesses, check_thm_p_power, check_thm_structure, check_thm_triples,
    classify_eppo, scan_corpus, EppoTag, ScanOptions, Status, VerificationReport, WitnessSpec,
};
use fwgroup::{Group, Result};

type Outcome = Result<std::result::Result<String, String>>;

fn ensure(ok: bool, what: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, budget: Duration) -> std::result::Result<(), String> {
    ensure(start.elapsed() <= budget, format!("over budget: {:?} > {budget:?}", start.elapsed()))
}

fn holds(r: &VerificationReport) -> bool {
    matches!(r.status, Status::Holds)
}

fn criterion_m10() -> Outcome {
    let start = Instant::now();
    let m = m10()?;
    let a6 = m.subgroup("A6")?;
    let outside = outside_spectrum(&m.group, a6)?.orders();
    let r = check_thm_p_power(&m.group, a6, 2)?;
    Ok((|| {
        ensure(m.group.order() == 720, format!("order {}", m.group.order()))?;
        ensure(outside == [4, 8], format!("outside spectrum {outside:?}"))?;
        ensure(holds(&r) && r.case == Some(2), r.to_json())?;
        within(start, Duration::from_secs(5))?;
        Ok(format!("|M10| = 720, orders outside A6 = {outside:?}, Thm4.1 case 2"))
    })())
}

fn criterion_g1() -> Outcome {
    let start = Instant::now();
    let g1 = example_g1()?;
    let (g, n, m) = (&g1.group, g1.subgroup("N1")?, g1.subgroup("M1")?);
    let (all, primes) = outside_all_prime_power(g, n)?;
    let top = outside_all_p_power(g, m, 2)?;
    let middle = outside_all_p_power(m, n, 3)?;
    let triples = check_thm_triples(g, n)?;
    let structure = check_thm_structure(g, n, m, 2, 3)?;
    Ok((|| {
        ensure(g.order() == 216, format!("order {}", g.order()))?;
        ensure(all && primes == BTreeSet::from([2, 3]), format!("outside N1: {all} {primes:?}"))?;
        ensure(top, "G1 \\ M1 has an element of non-2-power order")?;
        ensure(middle, "M1 \\ N1 has an element of non-3-power order")?;
        ensure(holds(&triples), triples.to_json())?;
        ensure(holds(&structure), structure.to_json())?;
        within(start, Duration::from_secs(10))?;
        Ok(format!("|G1| = 216, Thm4.2 case {:?}, six structural conclusions hold", triples.case.unwrap_or(0)))
    })())
}

fn criterion_g2() -> Outcome {
    let start = Instant::now();
    let g2 = example_g2()?;
    let g = &g2.group;
    let (all, primes) = outside_all_prime_power(g, g2.subgroup("N2")?)?;
    let triple = FwTriple::new(g, g2.subgroup("P2")?, g2.subgroup("L2")?);
    let top = quotient(g, g2.subgroup("L2")?)?;
    let top_frobenius = frobenius_kernel(top.carrier())?.is_some();
    let two = is_2frobenius(quotient(g, g2.subgroup("C1")?)?.carrier())?.is_some();
    let iso = two_frobenius_1152()?.order();
    Ok((|| {
        ensure(g.order() == 4608, format!("order {}", g.order()))?;
        ensure(all && primes == BTreeSet::from([2, 3]), format!("outside N2: {all} {primes:?}"))?;
        let t = triple.map_err(|e| format!("(G2, P2, L2): {e}"))?;
        let s = t.summary().map_err(|e| e.to_string())?;
        ensure(s.coprime && s.kernel_identities, format!("{s:?}"))?;
        ensure(top.order() == 18 && top_frobenius, format!("G2/L2 order {} frobenius {top_frobenius}", top.order()))?;
        ensure(two && iso == 1152, "G2/C1 is not 2-Frobenius")?;
        within(start, Duration::from_secs(60))?;
        Ok(format!("|G2| = 4608, (G2, P2, L2) triple with kernel {}, G2/C1 2-Frobenius", s.kernel))
    })())
}

const NONSOLVABLE: &[(&str, &str)] = &[
    ("PSL2(4)", "PSL2(4)"),
    ("PSL2(7)", "PSL2(7)"),
    ("PSL2(8)", "PSL2(8)"),
    ("PSL2(9)", "PSL2(9)"),
    ("PSL2(17)", "PSL2(17)"),
    ("PSL3(4)", "PSL3(4)"),
    ("M10", "M10"),
    ("Sz(8)", "Sz(8)"),
];

fn criterion_classification() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut solvable = 0;
    for name in BUNDLED_CORPUS {
        let g = lookup(name)?;
        if g.group.order() > 2000 || !is_solvable(&g.group) {
            continue;
        }
        match classify_eppo(&g.group) {
            Ok(c) if c.tag == EppoTag::NotEppo => {}
            Ok(c) if c.tag == EppoTag::NonsolvableListed => problems.push(format!("{name}: {c:?}")),
            Ok(_) => solvable += 1,
            Err(e) => problems.push(format!("{name}: {e}")),
        }
    }
    for (name, fingerprint) in NONSOLVABLE {
        let g = lookup(name)?;
        match classify_eppo(&g.group) {
            Ok(c) if c.fingerprint == Some(*fingerprint) => {}
            other => problems.push(format!("{name}: {other:?}")),
        }
    }
    Ok((|| {
        ensure(problems.is_empty(), problems.join("; "))?;
        within(start, Duration::from_secs(600))?;
        Ok(format!("{solvable} solvable EPPO groups classified, 8 fingerprints matched"))
    })())
}

fn small_corpus() -> Vec<String> {
    BUNDLED_CORPUS.iter().map(|s| s.to_string()).collect()
}

fn criterion_sweep(reports: &[VerificationReport], elapsed: Duration) -> std::result::Result<String, String> {
    let count = |claim: &str| reports.iter().filter(|r| r.claim == claim).count();
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| (r.claim == "Thm4.1" || r.claim == "Lem3.3") && r.status == Status::Fails)
        .map(|r| r.to_json())
        .collect();
    ensure(failed.is_empty(), failed.join("\n"))?;
    ensure(count("Thm4.1") > 0 && count("Lem3.3") > 0, "sweep produced no instances")?;
    ensure(elapsed <= Duration::from_secs(1800), format!("over budget: {elapsed:?}"))?;
    Ok(format!("{} Thm4.1 and {} Lem3.3 instances agree", count("Thm4.1"), count("Lem3.3")))
}

fn criterion_wielandt(reports: &[VerificationReport]) -> std::result::Result<String, String> {
    let triples: Vec<_> = reports.iter().flat_map(|r| &r.triples).collect();
    let bad: Vec<_> = triples.iter().filter(|t| !t.coprime || !t.kernel_identities).collect();
    ensure(!triples.is_empty(), "no triples discovered")?;
    ensure(bad.is_empty(), format!("{bad:?}"))?;
    let failing: Vec<_> = reports.iter().filter(|r| r.status == Status::Fails).map(|r| r.to_json()).collect();
    ensure(failing.is_empty(), failing.join("\n"))?;
    Ok(format!("{} triples coprime with kernel identities", triples.len()))
}

fn criterion_witnesses() -> Outcome {
    let start = Instant::now();
    let cases: &[(&str, &[WitnessSpec])] = &[
        ("PSL2(4)", &[WitnessSpec::dihedral(6), WitnessSpec::dihedral(10)]),
        ("PSL2(7)", &[WitnessSpec::dihedral(6), WitnessSpec::dihedral(14)]),
        ("PSL2(8)", &[WitnessSpec::dihedral(14), WitnessSpec::dihedral(18)]),
        ("PSL2(9)", &[WitnessSpec::dihedral(10), WitnessSpec::dihedral(18)]),
        ("PSL2(17)", &[WitnessSpec::dihedral(18), WitnessSpec::dihedral(34)]),
        (
            "Sz(8)",
            &[WitnessSpec::dihedral(14), WitnessSpec::frobenius(5, 4), WitnessSpec::frobenius(13, 4)],
        ),
    ];
    let mut missing = Vec::new();
    for (name, specs) in cases {
        let g = lookup(name)?;
        let r = check_dihedral_witnesses(&g.group, specs)?;
        if r.status != Status::Holds {
            missing.push(format!("{name} {}", r.counterexample.map(|c| c.to_string()).unwrap_or_default()));
        }
    }
    Ok((|| {
        ensure(missing.is_empty(), format!("not found: {}", missing.join(", ")))?;
        within(start, Duration::from_secs(300))?;
        Ok("all listed subgroups found by generating pairs".to_string())
    })())
}

fn definitional(g: &Group) -> bool {
    let table = CayleyTable::new(g).expect("small group");
    has_frobenius_complement(&table, &all_subgroups(&table))
}

fn criterion_detector() -> Outcome {
    let mut disagreements = Vec::new();
    let mut checked = 0;
    for name in BUNDLED_CORPUS {
        let g = lookup(name)?;
        if g.group.order() > 500 {
            continue;
        }
        checked += 1;
        let by_kernel = match frobenius_kernel(&g.group)? {
            Some(d) => is_frobenius_with_kernel(&g.group, &d.kernel)?,
            None => false,
        };
        if by_kernel != definitional(&g.group) {
            disagreements.push(name.to_string());
        }
    }
    Ok((|| {
        ensure(disagreements.is_empty(), format!("disagree on {}", disagreements.join(", ")))?;
        Ok(format!("{checked} groups agree"))
    })())
}

fn report(index: usize, title: &str, outcome: Outcome) -> bool {
    let (ok, text) = match outcome {
        Ok(Ok(s)) => (true, s),
        Ok(Err(s)) => (false, s),
        Err(e) => (false, format!("error: {e}")),
    };
    println!("{} criterion {index} ({title}): {text}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= report(1, "M10", criterion_m10());
    ok &= report(2, "G1", criterion_g1());
    ok &= report(3, "G2", criterion_g2());
    ok &= report(4, "classification", criterion_classification());

    let start = Instant::now();
    let options = ScanOptions { max_order: 2000, workers: 4, ..Default::default() };
    let scanned = scan_corpus(&small_corpus(), &options);
    let elapsed = start.elapsed();
    match scanned {
        Ok(reports) => {
            ok &= report(5, "biconditional sweep", Ok(criterion_sweep(&reports, elapsed)));
            ok &= report(6, "Wielandt invariants", Ok(criterion_wielandt(&reports)));
        }
        Err(e) => {
            ok &= report(5, "biconditional sweep", Err(e.clone()));
            ok &= report(6, "Wielandt invariants", Err(e));
        }
    }
    ok &= report(7, "subgroup witnesses", criterion_witnesses());
    ok &= report(8, "Frobenius detector", criterion_detector());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
