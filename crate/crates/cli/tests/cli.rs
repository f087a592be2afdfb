use std::io::Write;
use std::process::{Command, Output};

fn fwt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fwt"))
        .args(args)
        .env_remove("FW_CAP")
        .env_remove("FW_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().next().expect("one line")).expect("json")
}

#[test]
fn info_reports_structure() {
    let out = fwt(&["info", "S4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 24);
    assert_eq!(v["solvable"], true);
    assert_eq!(v["spectrum"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(json(&fwt(&["info", "catalog:G1"]))["order"], 216);
}

#[test]
fn missing_file_is_a_data_error() {
    let out = fwt(&["info", "missing.grp"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn prime_graphs() {
    let out = fwt(&["gk", "A5", "--dot"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "graph GK {\n  2;\n  3;\n  5;\n}\n");
    let v = json(&fwt(&["gk", "C6"]));
    assert_eq!(v["edges"], serde_json::json!([[2, 3]]));
    let v = json(&fwt(&["gk", "S4"]));
    assert_eq!(v["vertices"], serde_json::json!([2, 3]));
    assert_eq!(v["edges"], serde_json::json!([]));
}

#[test]
fn verify_exit_codes() {
    let out = fwt(&["verify", "Thm4.1", "catalog:M10", "--N", "A6", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "holds");
    assert_eq!(json(&out)["case"], 2);

    let out = fwt(&["verify", "Cor4.4", "catalog:G1", "--N", "N1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = fwt(&["verify", "Thm4.1", "S4", "--N", "V4", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "vacuous");

    let out = fwt(&["verify", "Thm1.1", "S4", "--N", "A4", "--p", "2"]);
    assert_eq!(json(&out)["claim"], "Thm4.1");

    assert_eq!(fwt(&["verify", "Thm9.9", "S4"]).status.code(), Some(2));
    assert_eq!(fwt(&["verify", "Thm4.1", "S4", "--N", "nope", "--p", "2"]).status.code(), Some(2));
    assert_eq!(fwt(&["verify", "Thm4.1", "S4", "--N", "A4"]).status.code(), Some(2));
    assert_eq!(fwt(&["--cap", "10", "verify", "Thm4.2", "S4", "--N", "V4"]).status.code(), Some(3));
}

#[test]
fn structure_claim_from_the_command_line() {
    let out = fwt(&["verify", "Thm4.3", "catalog:G1", "--N", "N1", "--M", "M1", "--p", "2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = fwt(&["verify", "Thm4.3", "S4", "--N", "1", "--M", "A4", "--p", "2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_bundled_to_500() {
    let out = fwt(&["scan", "--max-order", "500"]);
    assert_eq!(out.status.code(), Some(0));
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains(" 0 fails"), "{summary}");
}

#[test]
fn scan_empty_and_corrupt_corpora() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing\n").unwrap();
    let out = fwt(&["scan", "--corpus", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("0 instances"));

    let bad = dir.path().join("bad.grp");
    let mut f = std::fs::File::create(&bad).unwrap();
    writeln!(f, "degree 4\n(1 2)\n(1 2 3 4)\nsubgroup A4\n(1 2 3)\n(1 9)").unwrap();
    let list = dir.path().join("corpus.txt");
    std::fs::write(&list, format!("S4\n{}\n", bad.display())).unwrap();
    let out = fwt(&["scan", "--corpus", list.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_is_byte_deterministic() {
    let a = fwt(&["scan", "--max-order", "100", "--workers", "1"]);
    let b = fwt(&["scan", "--max-order", "100", "--workers", "1"]);
    let c = fwt(&["scan", "--max-order", "100", "--workers", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn environment_and_flag_precedence() {
    let capped = Command::new(env!("CARGO_BIN_EXE_fwt"))
        .args(["info", "S4"])
        .env("FW_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    let flagged = Command::new(env!("CARGO_BIN_EXE_fwt"))
        .args(["--cap", "100", "info", "S4"])
        .env("FW_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(flagged.status.code(), Some(0));
    assert_eq!(fwt(&["--workers", "0", "info", "S4"]).status.code(), Some(2));
}

#[test]
fn table_format() {
    let out = fwt(&["--format", "table", "verify", "Thm4.2", "catalog:G1", "--N", "N1"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("claim"));
    assert!(text.contains("holds"));
    assert_eq!(fwt(&["--format", "dot", "info", "S4"]).status.code(), Some(2));
}

#[test]
fn group_files_with_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.grp");
    std::fs::write(&path, "degree 4\n(1 2)\n(1 2 3 4)\nsubgroup V\n(1 2)(3 4)\n(1 3)(2 4)\n").unwrap();
    let out = fwt(&["verify", "Cor3.4", path.to_str().unwrap(), "--N", "V"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["instance"].as_str().unwrap().split(' ').next(), Some("s4"));
}
