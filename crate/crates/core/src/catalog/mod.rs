//! Named groups, generic families and the group-file format.

mod examples;
pub mod field;
mod generic;
mod groupfile;
mod simple;

use std::collections::BTreeMap;
use std::path::Path;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::spectrum::order_spectrum;
use crate::structure::{derived_subgroup, p_residual, sylow};

pub use examples::{example_g1, example_g2, two_frobenius_1152};
pub use generic::{affine, affine_semilinear, alternating, cyclic, dihedral, direct_product, quaternion, symmetric};
pub use groupfile::{load_group, load_group_with, parse_group, save_group, write_group};
pub use simple::{m10, psl2, psl3_4, sz8};

/// A group with labelled subgroups.
#[derive(Clone, Debug)]
pub struct LabeledGroup {
    pub name: String,
    pub group: Group,
    pub subgroups: BTreeMap<String, Group>,
}

impl LabeledGroup {
    pub fn new(name: impl Into<String>, group: Group) -> Self {
        LabeledGroup {
            name: name.into(),
            group,
            subgroups: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, label: impl Into<String>, h: Group) {
        debug_assert!(h.is_subgroup_of(&self.group));
        self.subgroups.insert(label.into(), h);
    }

    pub fn subgroup(&self, label: &str) -> Result<&Group> {
        self.subgroups
            .get(label)
            .ok_or_else(|| Error::UnknownSubgroup(label.to_string()))
    }

    /// Resolves a label, `1`/`trivial`, `G`, `derived`, `sylow:p` or
    /// `residual:p`.
    pub fn resolve(&self, spec: &str) -> Result<Group> {
        if let Some(h) = self.subgroups.get(spec) {
            return Ok(h.clone());
        }
        let prime = |s: &str| -> Result<u64> {
            let p: u64 = s
                .parse()
                .map_err(|_| Error::UnknownSubgroup(spec.to_string()))?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            Ok(p)
        };
        match spec {
            "1" | "trivial" => Ok(self.group.subgroup(&[])?),
            "G" => Ok(self.group.clone()),
            "derived" => Ok(derived_subgroup(&self.group)),
            _ => {
                if let Some(p) = spec.strip_prefix("sylow:") {
                    sylow(&self.group, prime(p)?)
                } else if let Some(p) = spec.strip_prefix("residual:") {
                    p_residual(&self.group, prime(p)?)
                } else {
                    Err(Error::UnknownSubgroup(spec.to_string()))
                }
            }
        }
    }
}

/// A stored group with its expected order and spectrum.
pub struct CatalogEntry {
    pub name: &'static str,
    pub expected_order: u64,
    pub expected_spectrum: &'static [u64],
    pub notes: &'static str,
    builder: fn() -> Result<LabeledGroup>,
}

impl CatalogEntry {
    /// Builds the group and checks its order and element-order spectrum.
    pub fn build(&self) -> Result<LabeledGroup> {
        let g = (self.builder)()?;
        if g.group.order() != self.expected_order {
            return Err(Error::Invariant(format!(
                "{} has order {}, expected {}",
                self.name,
                g.group.order(),
                self.expected_order
            )));
        }
        let spectrum = order_spectrum(&g.group)?.orders();
        if spectrum != self.expected_spectrum {
            return Err(Error::Invariant(format!(
                "{} has spectrum {spectrum:?}, expected {:?}",
                self.name, self.expected_spectrum
            )));
        }
        Ok(g)
    }
}

fn plain(name: &str, g: Result<Group>) -> Result<LabeledGroup> {
    Ok(LabeledGroup::new(name, g?))
}

fn labeled_s4() -> Result<LabeledGroup> {
    let s4 = symmetric(4)?;
    let mut out = LabeledGroup::new("S4", s4.clone());
    out.insert("A4", derived_subgroup(&s4));
    out.insert("V4", derived_subgroup(&derived_subgroup(&s4)));
    out.insert("D8", sylow(&s4, 2)?);
    Ok(out)
}

fn labeled_a4() -> Result<LabeledGroup> {
    let a4 = alternating(4)?;
    let mut out = LabeledGroup::new("A4", a4.clone());
    out.insert("V4", derived_subgroup(&a4));
    out.insert("Z3", sylow(&a4, 3)?);
    Ok(out)
}

fn labeled_s5() -> Result<LabeledGroup> {
    let s5 = symmetric(5)?;
    let mut out = LabeledGroup::new("S5", s5.clone());
    out.insert("A5", derived_subgroup(&s5));
    Ok(out)
}

fn labeled_psl(name: &str, q: u32) -> Result<LabeledGroup> {
    plain(name, psl2(q))
}

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "G1",
        expected_order: 216,
        expected_spectrum: &[1, 2, 3, 4, 6, 9, 18],
        notes: "(A4 x Z9) extended by an involution acting as S4 on A4 and inverting Z9",
        builder: example_g1,
    },
    CatalogEntry {
        name: "G2",
        expected_order: 4608,
        expected_spectrum: &[1, 2, 3, 4, 6, 9],
        notes: "(Z2^6 x Z2^2) extended by Z9:Z2, Z3 acting trivially on Z2^2; over GF(64) mod x^6+x+1",
        builder: example_g2,
    },
    CatalogEntry {
        name: "M10",
        expected_order: 720,
        expected_spectrum: &[1, 2, 3, 4, 5, 8],
        notes: "PSL(2,9) with the semilinear map v -> v^3 diag(nu,1), nu a nonsquare of GF(9)",
        builder: m10,
    },
    CatalogEntry {
        name: "PSL2(4)",
        expected_order: 60,
        expected_spectrum: &[1, 2, 3, 5],
        notes: "projective line over GF(4); isomorphic to A5",
        builder: || labeled_psl("PSL2(4)", 4),
    },
    CatalogEntry {
        name: "PSL2(7)",
        expected_order: 168,
        expected_spectrum: &[1, 2, 3, 4, 7],
        notes: "projective line over GF(7)",
        builder: || labeled_psl("PSL2(7)", 7),
    },
    CatalogEntry {
        name: "PSL2(8)",
        expected_order: 504,
        expected_spectrum: &[1, 2, 3, 7, 9],
        notes: "projective line over GF(8) mod x^3+x+1",
        builder: || labeled_psl("PSL2(8)", 8),
    },
    CatalogEntry {
        name: "PSL2(9)",
        expected_order: 360,
        expected_spectrum: &[1, 2, 3, 4, 5],
        notes: "projective line over GF(9) mod x^2+1; isomorphic to A6",
        builder: || labeled_psl("PSL2(9)", 9),
    },
    CatalogEntry {
        name: "PSL2(17)",
        expected_order: 2448,
        expected_spectrum: &[1, 2, 3, 4, 8, 9, 17],
        notes: "projective line over GF(17)",
        builder: || labeled_psl("PSL2(17)", 17),
    },
    CatalogEntry {
        name: "PSL3(4)",
        expected_order: 20160,
        expected_spectrum: &[1, 2, 3, 4, 5, 7],
        notes: "elementary transvections over GF(4) acting on the 21 points of PG(2,4)",
        builder: || plain("PSL3(4)", psl3_4()),
    },
    CatalogEntry {
        name: "Sz(8)",
        expected_order: 29120,
        expected_spectrum: &[1, 2, 4, 5, 7, 13],
        notes: "Suzuki matrices over GF(8) with theta: x -> x^4, acting on the 65-point ovoid",
        builder: || plain("Sz(8)", sz8()),
    },
    CatalogEntry {
        name: "S4",
        expected_order: 24,
        expected_spectrum: &[1, 2, 3, 4],
        notes: "labels A4, V4, D8",
        builder: labeled_s4,
    },
    CatalogEntry {
        name: "A4",
        expected_order: 12,
        expected_spectrum: &[1, 2, 3],
        notes: "labels V4, Z3",
        builder: labeled_a4,
    },
    CatalogEntry {
        name: "S5",
        expected_order: 120,
        expected_spectrum: &[1, 2, 3, 4, 5, 6],
        notes: "label A5",
        builder: labeled_s5,
    },
    CatalogEntry {
        name: "V4",
        expected_order: 4,
        expected_spectrum: &[1, 2],
        notes: "Klein four-group on 4 points",
        builder: || {
            let a4 = alternating(4)?;
            plain("V4", Ok(derived_subgroup(&a4).relimit(a4.limits())))
        },
    },
    CatalogEntry {
        name: "Q8",
        expected_order: 8,
        expected_spectrum: &[1, 2, 4],
        notes: "regular representation",
        builder: || plain("Q8", quaternion()),
    },
    CatalogEntry {
        name: "F20",
        expected_order: 20,
        expected_spectrum: &[1, 2, 4, 5],
        notes: "x -> ax+b over GF(5)",
        builder: || plain("F20", affine(5, 4)),
    },
    CatalogEntry {
        name: "F21",
        expected_order: 21,
        expected_spectrum: &[1, 3, 7],
        notes: "x -> ax+b over GF(7), a a cube",
        builder: || plain("F21", affine(7, 3)),
    },
    CatalogEntry {
        name: "F36",
        expected_order: 36,
        expected_spectrum: &[1, 2, 3, 4],
        notes: "x -> ax+b over GF(9), a of order dividing 4",
        builder: || plain("F36", affine(9, 4)),
    },
    CatalogEntry {
        name: "F52",
        expected_order: 52,
        expected_spectrum: &[1, 2, 4, 13],
        notes: "x -> ax+b over GF(13), a of order dividing 4",
        builder: || plain("F52", affine(13, 4)),
    },
    CatalogEntry {
        name: "AGL1(8)",
        expected_order: 56,
        expected_spectrum: &[1, 2, 7],
        notes: "affine group of GF(8)",
        builder: || plain("AGL1(8)", affine(8, 7)),
    },
    CatalogEntry {
        name: "AGL1(9)",
        expected_order: 72,
        expected_spectrum: &[1, 2, 3, 4, 8],
        notes: "affine group of GF(9)",
        builder: || plain("AGL1(9)", affine(9, 8)),
    },
    CatalogEntry {
        name: "AGammaL1(8)",
        expected_order: 168,
        expected_spectrum: &[1, 2, 3, 6, 7],
        notes: "semilinear affine group of GF(8)",
        builder: || plain("AGammaL1(8)", affine_semilinear(8)),
    },
    CatalogEntry {
        name: "2F1152",
        expected_order: 1152,
        expected_spectrum: &[1, 2, 3, 4, 9],
        notes: "Z2^6 extended by D18 acting on GF(64); a 2-Frobenius group",
        builder: || plain("2F1152", two_frobenius_1152()),
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

fn aliases(name: &str) -> &str {
    match name {
        "A5" => "PSL2(4)",
        "A6" => "PSL2(9)",
        "PSL(2,4)" => "PSL2(4)",
        "PSL(2,7)" => "PSL2(7)",
        "PSL(2,8)" => "PSL2(8)",
        "PSL(2,9)" => "PSL2(9)",
        "PSL(2,17)" => "PSL2(17)",
        "PSL(3,4)" => "PSL3(4)",
        "Sz8" => "Sz(8)",
        other => other,
    }
}

fn family(name: &str) -> Option<Result<LabeledGroup>> {
    let (head, tail) = name.split_at(name.find(|c: char| c.is_ascii_digit())?);
    let n: usize = tail.parse().ok()?;
    let g = match head {
        "C" | "Z" => cyclic(n),
        "D" => dihedral(n),
        "S" => symmetric(n),
        "A" => alternating(n),
        _ => return None,
    };
    Some(g.map(|g| LabeledGroup::new(name, g)))
}

/// Looks up a catalog name: a stored entry, an alias, or a family member
/// `C<n>`, `D<order>`, `S<n>`, `A<n>`, `PSL2(<q>)`.
pub fn lookup(name: &str) -> Result<LabeledGroup> {
    let name = aliases(name);
    if let Some(entry) = ENTRIES.iter().find(|e| e.name == name) {
        return entry.build();
    }
    if let Some(g) = family(name) {
        return g;
    }
    if let Some(inner) = name.strip_prefix("PSL2(").and_then(|s| s.strip_suffix(')')) {
        if let Ok(q) = inner.parse::<u32>() {
            return plain(name, psl2(q));
        }
    }
    Err(Error::UnknownGroup(name.to_string()))
}

/// `catalog:NAME`, a path to a group file, or a bare catalog name.
pub fn resolve_group(reference: &str) -> Result<LabeledGroup> {
    if let Some(name) = reference.strip_prefix("catalog:") {
        return lookup(name);
    }
    let path = Path::new(reference);
    if path.exists() || reference.contains('/') || reference.ends_with(".grp") {
        return load_group(path);
    }
    lookup(reference)
}

/// Every corpus member, ascending by order.
pub const BUNDLED_CORPUS: &[&str] = &[
    "C2", "C3", "C4", "V4", "C5", "C6", "D6", "C7", "C8", "D8", "Q8", "C9", "D10", "A4", "D12",
    "D14", "D18", "F20", "F21", "S4", "F36", "F52", "AGL1(8)", "PSL2(4)", "AGL1(9)", "S5",
    "PSL2(7)", "AGammaL1(8)", "G1", "PSL2(9)", "PSL2(8)", "M10", "2F1152", "PSL2(17)", "G2",
    "PSL3(4)", "Sz(8)",
];

/// Parses a corpus listing: one group reference per line, `#` comments.
pub fn parse_corpus(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_small_entry_self_checks() {
        for e in ENTRIES.iter().filter(|e| e.expected_order <= 2448) {
            let g = e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(g.name, e.name);
        }
    }

    #[test]
    fn large_entries_self_check() {
        for e in ENTRIES.iter().filter(|e| e.expected_order > 2448) {
            e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }

    #[test]
    fn lookups() {
        assert_eq!(lookup("C6").unwrap().group.order(), 6);
        assert_eq!(lookup("D18").unwrap().group.order(), 18);
        assert_eq!(lookup("A5").unwrap().group.order(), 60);
        assert_eq!(lookup("PSL2(5)").unwrap().group.order(), 60);
        assert!(matches!(lookup("nope"), Err(Error::UnknownGroup(_))));
        let s4 = resolve_group("catalog:S4").unwrap();
        assert_eq!(s4.resolve("V4").unwrap().order(), 4);
        assert_eq!(s4.resolve("sylow:3").unwrap().order(), 3);
        assert_eq!(s4.resolve("residual:2").unwrap().order(), 12);
        assert!(s4.resolve("1").unwrap().is_trivial());
        assert!(matches!(s4.resolve("W"), Err(Error::UnknownSubgroup(_))));
        assert!(matches!(s4.resolve("sylow:4"), Err(Error::NotPrime(4))));
    }

    #[test]
    fn corpus_listing() {
        let text = "# header\nS4\n\n catalog:G1  # comment\n";
        assert_eq!(parse_corpus(text), vec!["S4", "catalog:G1"]);
        let orders: Vec<u64> = BUNDLED_CORPUS
            .iter()
            .take(20)
            .map(|n| lookup(n).unwrap().group.order())
            .collect();
        assert!(orders.windows(2).all(|w| w[0] <= w[1]));
    }
}
