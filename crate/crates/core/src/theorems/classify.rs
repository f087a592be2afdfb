use serde::Serialize;

use crate::arith::{prime_divisors, prime_power_base};
use crate::error::{Error, Result};
use crate::frobwield::{frobenius_kernel, is_2frobenius};
use crate::group::Group;
use crate::spectrum::{is_eppo, order_spectrum};
use crate::structure::{is_solvable, normal_subgroups};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EppoTag {
    PGroup,
    FrobeniusPq,
    #[serde(rename = "2frobenius-pq")]
    TwoFrobeniusPq,
    NonsolvableListed,
    NotEppo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EppoClassification {
    pub tag: EppoTag,
    pub primes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<&'static str>,
}

/// Order, element-order spectrum and number of normal subgroups of a
/// nonsolvable group whose elements all have prime-power order.
pub struct Fingerprint {
    pub name: &'static str,
    pub order: u64,
    pub spectrum: &'static [u64],
    pub normal_subgroups: usize,
}

pub static FINGERPRINTS: &[Fingerprint] = &[
    Fingerprint { name: "PSL2(4)", order: 60, spectrum: &[1, 2, 3, 5], normal_subgroups: 2 },
    Fingerprint { name: "PSL2(7)", order: 168, spectrum: &[1, 2, 3, 4, 7], normal_subgroups: 2 },
    Fingerprint { name: "PSL2(8)", order: 504, spectrum: &[1, 2, 3, 7, 9], normal_subgroups: 2 },
    Fingerprint { name: "PSL2(9)", order: 360, spectrum: &[1, 2, 3, 4, 5], normal_subgroups: 2 },
    Fingerprint { name: "PSL2(17)", order: 2448, spectrum: &[1, 2, 3, 4, 8, 9, 17], normal_subgroups: 2 },
    Fingerprint { name: "PSL3(4)", order: 20160, spectrum: &[1, 2, 3, 4, 5, 7], normal_subgroups: 2 },
    Fingerprint { name: "M10", order: 720, spectrum: &[1, 2, 3, 4, 5, 8], normal_subgroups: 3 },
    Fingerprint { name: "Sz(8)", order: 29120, spectrum: &[1, 2, 4, 5, 7, 13], normal_subgroups: 2 },
];

/// Places an EPPO group in the solvable trichotomy or matches it against the
/// stored nonsolvable fingerprints. Groups with an element of non-prime-power
/// order are tagged `NotEppo`.
pub fn classify_eppo(g: &Group) -> Result<EppoClassification> {
    let primes = prime_divisors(g.order());
    let make = |tag, fingerprint| EppoClassification {
        tag,
        primes: primes.clone(),
        fingerprint,
    };
    if !is_eppo(g)? {
        return Ok(make(EppoTag::NotEppo, None));
    }
    if g.order() == 1 || prime_power_base(g.order()).is_some() {
        return Ok(make(EppoTag::PGroup, None));
    }
    if is_solvable(g) {
        if frobenius_kernel(g)?.is_some() {
            return Ok(make(EppoTag::FrobeniusPq, None));
        }
        if is_2frobenius(g)?.is_some() {
            return Ok(make(EppoTag::TwoFrobeniusPq, None));
        }
        return Err(Error::ClassificationGap(format!(
            "solvable of order {} is neither Frobenius nor 2-Frobenius",
            g.order()
        )));
    }
    let spectrum = order_spectrum(g)?.orders();
    let normals = normal_subgroups(g)?.len();
    FINGERPRINTS
        .iter()
        .find(|f| f.order == g.order() && f.spectrum == spectrum && f.normal_subgroups == normals)
        .map(|f| make(EppoTag::NonsolvableListed, Some(f.name)))
        .ok_or_else(|| {
            Error::ClassificationGap(format!(
                "nonsolvable of order {} with spectrum {spectrum:?} and {normals} normal subgroups",
                g.order()
            ))
        })
}
