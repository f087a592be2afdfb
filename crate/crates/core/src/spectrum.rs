//! Element-order spectra and Gruenberg–Kegel prime graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::{is_power_of, is_prime_power, prime_divisors};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::structure::require_normal;

/// Multiset of element orders.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderSpectrum {
    pub counts: BTreeMap<u64, u64>,
}

impl OrderSpectrum {
    fn from_orders<'a>(orders: impl IntoIterator<Item = &'a u64>) -> Self {
        let mut counts = BTreeMap::new();
        for &o in orders {
            *counts.entry(o).or_insert(0) += 1;
        }
        OrderSpectrum { counts }
    }

    /// Distinct orders, ascending.
    pub fn orders(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }

    pub fn count(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// Number of elements recorded.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn all_prime_powers(&self) -> bool {
        self.counts.keys().all(|&o| is_prime_power(o))
    }

    /// Primes dividing some recorded order.
    pub fn primes(&self) -> BTreeSet<u64> {
        self.counts.keys().flat_map(|&o| prime_divisors(o)).collect()
    }
}

pub fn order_spectrum(g: &Group) -> Result<OrderSpectrum> {
    g.memo_result("spectrum", || Ok(OrderSpectrum::from_orders(g.element_orders()?)))
}

/// Orders of the elements of `G ∖ N`. Empty when `N = G`.
pub fn outside_spectrum(g: &Group, n: &Group) -> Result<OrderSpectrum> {
    require_normal(g, n, "N")?;
    let elements = g.elements()?;
    let orders = g.element_orders()?;
    Ok(OrderSpectrum::from_orders(
        elements
            .iter()
            .zip(orders)
            .filter(|(x, _)| !n.includes(x))
            .map(|(_, o)| o),
    ))
}

fn proper_outside(g: &Group, n: &Group) -> Result<OrderSpectrum> {
    let spectrum = outside_spectrum(g, n)?;
    if spectrum.is_empty() {
        return Err(Error::EmptyComplement);
    }
    Ok(spectrum)
}

/// Every element of `G ∖ N` has `p`-power order.
pub fn outside_all_p_power(g: &Group, n: &Group, p: u64) -> Result<bool> {
    let spectrum = proper_outside(g, n)?;
    Ok(spectrum.counts.keys().all(|&o| is_power_of(o, p)))
}

/// Whether every element of `G ∖ N` has prime-power order, and the primes
/// dividing those orders.
pub fn outside_all_prime_power(g: &Group, n: &Group) -> Result<(bool, BTreeSet<u64>)> {
    let spectrum = proper_outside(g, n)?;
    Ok((spectrum.all_prime_powers(), spectrum.primes()))
}

pub fn is_eppo(g: &Group) -> Result<bool> {
    Ok(order_spectrum(g)?.all_prime_powers())
}

/// The Gruenberg–Kegel graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GKGraph {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
}

impl GKGraph {
    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        let key = (p.min(q), p.max(q));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph GK {\n");
        for v in &self.vertices {
            writeln!(out, "  {v};").unwrap();
        }
        for (p, q) in &self.edges {
            writeln!(out, "  {p} -- {q};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

pub fn gk_graph(g: &Group) -> Result<GKGraph> {
    let spectrum = order_spectrum(g)?;
    let vertices = prime_divisors(g.order());
    let mut edges = BTreeSet::new();
    for &o in spectrum.counts.keys() {
        let ps = prime_divisors(o);
        for (i, &p) in ps.iter().enumerate() {
            for &q in &ps[i + 1..] {
                edges.insert((p, q));
            }
        }
    }
    Ok(GKGraph {
        vertices,
        edges: edges.into_iter().collect(),
    })
}
