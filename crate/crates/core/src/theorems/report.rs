use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::frobwield::{FwTriple, TripleSummary};
use crate::group::Group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Vacuous,
    Fails,
    SkippedCap,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Vacuous => "vacuous",
            Status::Fails => "fails",
            Status::SkippedCap => "skipped-cap",
        }
    }
}

/// Outcome of one claim on one instance.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<u8>,
    pub details: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub triples: Vec<TripleSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(claim: &str, instance: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            instance: instance.into(),
            status: Status::Holds,
            lhs: None,
            rhs: None,
            case: None,
            details: BTreeMap::new(),
            counterexample: None,
            triples: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn skipped(claim: &str, instance: impl Into<String>, err: &Error) -> Self {
        let mut r = VerificationReport::new(claim, instance);
        r.status = Status::SkippedCap;
        r.detail("reason", err.to_string());
        r
    }

    pub fn with_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn fail(&mut self, counterexample: Value) {
        self.status = Status::Fails;
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample);
        }
    }

    /// Records both sides of a biconditional. Agreement is a pass, tagged
    /// vacuous when both sides are false.
    pub fn set_iff(&mut self, lhs: bool, rhs: bool, counterexample: impl FnOnce() -> Value) {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        if lhs != rhs {
            self.fail(counterexample());
        } else if !lhs && self.status == Status::Holds {
            self.status = Status::Vacuous;
        }
    }

    /// Records a triple's invariants; a violation fails the report.
    pub fn record_triple(&mut self, t: &FwTriple) -> Result<()> {
        let s = t.summary()?;
        if !s.coprime || !s.kernel_identities {
            self.fail(serde_json::json!({
                "triple": [s.g, s.h, s.l],
                "coprime": s.coprime,
                "kernel_identities": s.kernel_identities,
            }));
        }
        self.triples.push(s);
        Ok(())
    }

    /// Validates `(G, H, L)`, recording the triple when it is one.
    /// Degenerate shapes count as "not a triple".
    pub(crate) fn triple(&mut self, g: &Group, h: &Group, l: &Group) -> Result<bool> {
        match FwTriple::new(g, h, l) {
            Ok(t) => {
                self.record_triple(&t)?;
                Ok(true)
            }
            Err(Error::Precondition(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

pub fn describe(g: &Group, n: &Group) -> String {
    format!("|G|={} |N|={}", g.order(), n.order())
}

fn cell(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "T",
        Some(false) => "F",
        None => "-",
    }
}

/// Counts per status, in the order holds, vacuous, fails, skipped.
pub fn tally(reports: &[VerificationReport]) -> [usize; 4] {
    let mut counts = [0; 4];
    for r in reports {
        counts[r.status as usize] += 1;
    }
    counts
}

pub fn summary_line(reports: &[VerificationReport]) -> String {
    let [h, v, f, s] = tally(reports);
    format!(
        "{} instances: {h} holds, {v} vacuous, {f} fails, {s} skipped",
        reports.len()
    )
}

/// A fixed-width table, one row per report, followed by the summary line.
pub fn format_table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.instance.len()).max().unwrap_or(8).max(8);
    let mut out = String::new();
    writeln!(
        out,
        "{:<10} {:<width$} {:<11} {:>3} {:>3} {:>4}",
        "claim", "instance", "status", "lhs", "rhs", "case"
    )
    .unwrap();
    for r in reports {
        let case = r.case.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{:<10} {:<width$} {:<11} {:>3} {:>3} {:>4}",
            r.claim,
            r.instance,
            r.status.as_str(),
            cell(r.lhs),
            cell(r.rhs),
            case
        )
        .unwrap();
    }
    out.push_str(&summary_line(reports));
    out.push('\n');
    out
}
