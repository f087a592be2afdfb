//! `fwt`: inspect permutation groups and run the prime-power-order verifiers.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fwgroup::catalog::{parse_corpus, resolve_group, LabeledGroup, BUNDLED_CORPUS};
use fwgroup::spectrum::{gk_graph, order_spectrum};
use fwgroup::structure::{is_solvable, normal_subgroups};
use fwgroup::theorems::{self, format_table, scan_corpus, summary_line, ScanOptions, Status, VerificationReport};
use fwgroup::{Error, Group, Limits};

#[derive(Parser)]
#[command(name = "fwt", version, about = "Permutation groups and Frobenius-Wielandt checks")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest group the element scans will enumerate.
    #[arg(long, global = true, env = "FW_CAP", default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Largest permutation degree accepted from input.
    #[arg(long, global = true, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
    degree_cap: u64,
    #[arg(long, global = true, env = "FW_WORKERS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Record per-instance wall time in reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Order, degree, solvability, spectrum and normal subgroups.
    Info { group: String },
    /// The prime graph.
    Gk {
        group: String,
        #[arg(long)]
        dot: bool,
    },
    /// Run one verifier.
    Verify {
        claim: String,
        group: String,
        #[arg(long = "N")]
        n: Option<String>,
        #[arg(long = "H")]
        h: Option<String>,
        #[arg(long = "M")]
        m: Option<String>,
        #[arg(long = "L")]
        l: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Run every verifier over a corpus.
    Scan {
        /// One group reference per line; the bundled corpus if absent.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 2000)]
        max_order: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl Global {
    fn limits(&self) -> Limits {
        Limits {
            enumeration_cap: self.cap as usize,
            degree_cap: self.degree_cap as usize,
        }
    }

    fn load(&self, reference: &str) -> Result<LabeledGroup, Failure> {
        let mut lg = resolve_group(reference)?;
        if lg.group.degree() > self.degree_cap as usize {
            return Err(Error::DegreeCapExceeded { degree: lg.group.degree(), cap: self.degree_cap as usize }.into());
        }
        let limits = self.limits();
        lg.group = lg.group.relimit(limits);
        for h in lg.subgroups.values_mut() {
            *h = h.relimit(limits);
        }
        Ok(lg)
    }
}

fn info(global: &Global, reference: &str) -> Result<u8, Failure> {
    let lg = global.load(reference)?;
    let g = &lg.group;
    let spectrum = order_spectrum(g)?;
    let normals: Vec<u64> = normal_subgroups(g)?.iter().map(Group::order).collect();
    let solvable = is_solvable(g);
    match global.format {
        Format::Json => {
            let counts: serde_json::Map<String, serde_json::Value> =
                spectrum.counts.iter().map(|(o, c)| (o.to_string(), json!(c))).collect();
            let out = json!({
                "name": lg.name,
                "order": g.order(),
                "degree": g.degree(),
                "solvable": solvable,
                "spectrum": spectrum.orders(),
                "order_counts": counts,
                "normal_subgroup_orders": normals,
                "subgroups": lg.subgroups.iter().map(|(k, h)| (k.clone(), json!(h.order()))).collect::<serde_json::Map<_, _>>(),
            });
            println!("{out}");
        }
        Format::Table => {
            println!("name      {}", lg.name);
            println!("order     {}", g.order());
            println!("degree    {}", g.degree());
            println!("solvable  {solvable}");
            println!("spectrum  {}", join(&spectrum.orders()));
            println!("normal    {}", join(&normals));
            for (label, h) in &lg.subgroups {
                println!("subgroup  {label} {}", h.order());
            }
        }
        Format::Dot => return Err(usage("--format dot applies to gk only")),
    }
    Ok(0)
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn gk(global: &Global, reference: &str, dot: bool) -> Result<u8, Failure> {
    let lg = global.load(reference)?;
    let graph = gk_graph(&lg.group)?;
    match (dot, global.format) {
        (true, _) | (false, Format::Dot) => print!("{}", graph.to_dot()),
        (false, Format::Json) => println!("{}", graph.to_json()),
        (false, Format::Table) => {
            println!("vertices {}", join(&graph.vertices));
            for (p, q) in &graph.edges {
                println!("edge     {p} {q}");
            }
        }
    }
    Ok(0)
}

fn canonical_claim(claim: &str) -> &str {
    match claim {
        "Thm1.1" => "Thm4.1",
        "Thm1.2" => "Cor4.4",
        other => other,
    }
}

struct VerifyArgs<'a> {
    claim: &'a str,
    n: Option<&'a str>,
    h: Option<&'a str>,
    m: Option<&'a str>,
    l: Option<&'a str>,
    p: Option<u64>,
    q: Option<u64>,
}

fn run_claim(lg: &LabeledGroup, a: &VerifyArgs) -> Result<VerificationReport, Failure> {
    let g = &lg.group;
    let sub = |flag: &str, v: Option<&str>| -> Result<Group, Failure> {
        let spec = v.ok_or_else(|| usage(format!("{} needs --{flag}", a.claim)))?;
        Ok(lg.resolve(spec)?)
    };
    let prime = |flag: &str, v: Option<u64>| v.ok_or_else(|| usage(format!("{} needs --{flag}", a.claim)));
    let n_or_trivial = || match a.n {
        Some(spec) => lg.resolve(spec).map_err(Failure::from),
        None => Ok(g.subgroup(&[]).map_err(Failure::from)?),
    };
    let report = match canonical_claim(a.claim) {
        "Thm4.1" => theorems::check_thm_p_power(g, &sub("N", a.n)?, prime("p", a.p)?)?,
        "Thm4.2" => theorems::check_thm_triples(g, &sub("N", a.n)?)?,
        "Thm4.3" => theorems::check_thm_structure(
            g,
            &sub("N", a.n)?,
            &sub("M", a.m)?,
            prime("p", a.p)?,
            prime("q", a.q)?,
        )?,
        "Cor4.4" => theorems::check_cor_pq(g, &sub("N", a.n)?)?,
        "Thm4.5" => theorems::check_thm_nonsolvable(g, &n_or_trivial()?)?,
        "Thm1.3" => theorems::check_thm_many_primes(g, &n_or_trivial()?)?,
        "Lem3.1" => theorems::check_lemma_normalizer(g, &sub("H", a.h)?, &sub("L", a.l)?)?,
        "Lem3.3" => theorems::check_lemma_conjugacy(g, &sub("H", a.h)?, &sub("N", a.n)?)?,
        "Cor3.4" => theorems::check_cor_quotient_triple(g, &sub("N", a.n)?)?,
        "Thm2.1" | "Thm2.2" => theorems::check_classification(g)?,
        other => return Err(usage(format!("unknown claim `{other}`"))),
    };
    Ok(report)
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Holds | Status::Vacuous => 0,
        Status::Fails => 1,
        Status::SkippedCap => 3,
    }
}

fn emit(global: &Global, reports: &[VerificationReport]) -> Result<(), Failure> {
    match global.format {
        Format::Json => {
            for r in reports {
                println!("{}", r.to_json());
            }
        }
        Format::Table => print!("{}", format_table(reports)),
        Format::Dot => return Err(usage("--format dot applies to gk only")),
    }
    Ok(())
}

fn verify(global: &Global, group: &str, args: VerifyArgs) -> Result<u8, Failure> {
    let lg = global.load(group)?;
    let mut report = match run_claim(&lg, &args) {
        Err(Failure { code: 3, message }) => {
            VerificationReport::skipped(args.claim, lg.name.clone(), &Error::Invariant(message))
        }
        other => other?,
    };
    report.instance = format!("{} {}", lg.name, report.instance);
    if !global.timing {
        report.elapsed_ms = None;
    }
    emit(global, std::slice::from_ref(&report))?;
    Ok(status_code(report.status))
}

fn scan(global: &Global, corpus: Option<&PathBuf>, max_order: u64) -> Result<u8, Failure> {
    let names = match corpus {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            parse_corpus(&text)
        }
        None => BUNDLED_CORPUS.iter().map(|s| s.to_string()).collect(),
    };
    let options = ScanOptions {
        max_order,
        limits: global.limits(),
        workers: global.workers as usize,
        timing: global.timing,
    };
    let reports = scan_corpus(&names, &options)?;
    emit(global, &reports)?;
    if global.format == Format::Json {
        eprintln!("{}", summary_line(&reports));
    }
    Ok(u8::from(reports.iter().any(|r| r.status == Status::Fails)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match &cli.command {
        Command::Info { group } => info(g, group),
        Command::Gk { group, dot } => gk(g, group, *dot),
        Command::Verify { claim, group, n, h, m, l, p, q } => verify(
            g,
            group,
            VerifyArgs {
                claim,
                n: n.as_deref(),
                h: h.as_deref(),
                m: m.as_deref(),
                l: l.as_deref(),
                p: *p,
                q: *q,
            },
        ),
        Command::Scan { corpus, max_order } => scan(g, corpus.as_ref(), *max_order),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("fwt: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
