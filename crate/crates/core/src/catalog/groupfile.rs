//! The plain-text group file.
//!
//! ```text
//! # the symmetric group with its derived subgroup
//! degree 4
//! (1 2)
//! (1 2 3 4)
//! subgroup A4
//! (1 2 3)
//! (1 2)(3 4)
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::perm::{parse_cycle_list, Permutation};

use super::LabeledGroup;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_generator(text: &str, degree: usize, line: usize) -> Result<Permutation> {
    let cycles = parse_cycle_list(text).map_err(|e| match e {
        Error::Parse { message, .. } => parse_error(line, message),
        other => other,
    })?;
    Permutation::from_cycles(&cycles, degree).map_err(|e| parse_error(line, e.to_string()))
}

/// Parses group-file text.
pub fn parse_group(text: &str, name: &str, limits: Limits) -> Result<LabeledGroup> {
    let mut degree: Option<usize> = None;
    let mut main: Vec<Permutation> = Vec::new();
    let mut sections: Vec<(String, usize, Vec<Permutation>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if !content.is_ascii() {
            return Err(parse_error(line, "non-ASCII text"));
        }
        let Some(n) = degree else {
            let value = content
                .strip_prefix("degree")
                .filter(|rest| rest.starts_with(char::is_whitespace))
                .ok_or_else(|| parse_error(line, "expected `degree <n>`"))?;
            let n: usize = value
                .trim()
                .parse()
                .map_err(|_| parse_error(line, format!("bad degree `{}`", value.trim())))?;
            if n == 0 {
                return Err(parse_error(line, "degree must be positive"));
            }
            degree = Some(n);
            continue;
        };
        if let Some(label) = content.strip_prefix("subgroup") {
            let label = label.trim();
            if label.is_empty() || label.contains(char::is_whitespace) {
                return Err(parse_error(line, "expected `subgroup <NAME>`"));
            }
            if sections.iter().any(|(l, _, _)| l == label) {
                return Err(parse_error(line, format!("duplicate subgroup `{label}`")));
            }
            sections.push((label.to_string(), line, Vec::new()));
            continue;
        }
        let g = parse_generator(content, n, line)?;
        match sections.last_mut() {
            Some((_, _, gens)) => gens.push(g),
            None => main.push(g),
        }
    }
    let degree = degree.ok_or_else(|| parse_error(0, "missing `degree <n>` header"))?;
    if degree > limits.degree_cap {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: limits.degree_cap,
        });
    }
    let group = if main.is_empty() {
        Group::trivial(degree).relimit(limits)
    } else {
        Group::with_limits(&main, limits)?
    };
    let mut out = LabeledGroup::new(name, group.clone());
    for (label, line, gens) in sections {
        for g in &gens {
            if !group.contains(g)? {
                return Err(Error::NotSubgroup(format!(
                    "subgroup `{label}` (line {line}): generator {g} is not in the group"
                )));
            }
        }
        out.insert(label, group.subgroup(&gens)?);
    }
    Ok(out)
}

/// Reads a group file; the group is named after the file stem.
pub fn load_group(path: &Path) -> Result<LabeledGroup> {
    load_group_with(path, Limits::default())
}

pub fn load_group_with(path: &Path, limits: Limits) -> Result<LabeledGroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    parse_group(&text, &name, limits)
}

pub fn write_group(g: &LabeledGroup) -> String {
    let mut out = String::new();
    writeln!(out, "# {}", g.name).unwrap();
    writeln!(out, "degree {}", g.group.degree()).unwrap();
    for x in g.group.generators() {
        writeln!(out, "{x}").unwrap();
    }
    for (label, h) in &g.subgroups {
        writeln!(out, "subgroup {label}").unwrap();
        for x in h.generators() {
            writeln!(out, "{x}").unwrap();
        }
    }
    out
}

pub fn save_group(g: &LabeledGroup, path: &Path) -> Result<()> {
    std::fs::write(path, write_group(g))?;
    Ok(())
}
