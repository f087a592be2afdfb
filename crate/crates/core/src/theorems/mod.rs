//! Verifiers for the prime-power-order claims, with JSON reports.

mod classify;
mod report;
mod scan;
mod verifiers;

pub use classify::{classify_eppo, EppoClassification, EppoTag, Fingerprint, FINGERPRINTS};
pub use report::{describe, format_table, summary_line, tally, Status, VerificationReport};
pub use scan::{scan_corpus, scan_group, ScanOptions};
pub use verifiers::*;
