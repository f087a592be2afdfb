//! Permutation groups backed by a base and strong generating set.

use std::any::Any;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;
pub const DEFAULT_DEGREE_CAP: usize = 256;

/// Size limits inherited by every group derived from a parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order for which elements may be listed.
    pub enumeration_cap: usize,
    /// Largest degree accepted for user-supplied groups.
    pub degree_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

/// A conjugacy class, as indices into [`Group::elements`].
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: u64,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

type Memo = Mutex<HashMap<String, Arc<dyn Any + Send + Sync>>>;

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: Bsgs,
    order: u64,
    limits: Limits,
    elements: OnceLock<Vec<Permutation>>,
    index: OnceLock<HashMap<Permutation, u32>>,
    orders: OnceLock<Vec<u64>>,
    classes: OnceLock<Vec<ConjugacyClass>>,
    memo: Memo,
}

/// An immutable permutation group. Cloning is cheap and clones share
/// every cached computation.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

impl Group {
    /// Builds `⟨gens⟩` with default limits.
    pub fn from_generators(gens: &[Permutation]) -> Result<Group> {
        Group::with_limits(gens, Limits::default())
    }

    /// Builds `⟨gens⟩`, rejecting degrees above `limits.degree_cap`.
    pub fn with_limits(gens: &[Permutation], limits: Limits) -> Result<Group> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if degree > limits.degree_cap {
            return Err(Error::DegreeCapExceeded {
                degree,
                cap: limits.degree_cap,
            });
        }
        Group::build(degree, gens, limits)
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Group {
        Group::build(degree, &[], Limits::default()).expect("trivial group")
    }

    /// Construction without the degree cap, used for groups derived from an
    /// already accepted parent (quotient carriers in particular).
    pub(crate) fn build(degree: usize, gens: &[Permutation], limits: Limits) -> Result<Group> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators: Vec<Permutation> = {
            let mut v: Vec<Permutation> = Vec::new();
            for g in gens {
                if !g.is_identity() && !v.contains(g) {
                    v.push(g.clone());
                }
            }
            v
        };
        let bsgs = Bsgs::new(degree, &generators);
        let order = bsgs.order()?;
        Ok(Group(Arc::new(GroupData {
            degree,
            generators,
            bsgs,
            order,
            limits,
            elements: OnceLock::new(),
            index: OnceLock::new(),
            orders: OnceLock::new(),
            classes: OnceLock::new(),
            memo: Mutex::new(HashMap::new()),
        })))
    }

    /// A group on the same points, with the same limits, generated by `gens`.
    pub(crate) fn derive(&self, gens: &[Permutation]) -> Group {
        Group::build(self.degree(), gens, self.limits()).expect("degree already checked")
    }

    /// The subgroup generated by `gens`, which must all lie in `self`.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<Group> {
        for g in gens {
            if !self.contains(g)? {
                return Err(Error::NotSubgroup(format!("{g} is not an element")));
            }
        }
        Ok(self.derive(gens))
    }

    /// The subgroup generated by a subset of this group's elements, grown one
    /// generator at a time so the generating set stays small.
    pub fn subgroup_from_elements<'a, I>(&self, elements: I) -> Group
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = self.derive(&[]);
        for x in elements {
            if !current.includes(x) {
                gens.push(x.clone());
                current = self.derive(&gens);
                if current.order() == self.order() {
                    break;
                }
            }
        }
        current
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Non-identity generators, deduplicated, in the given order.
    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.0.bsgs.strong
    }

    /// Base points, 0-based.
    pub fn base(&self) -> Vec<u32> {
        self.0.bsgs.base()
    }

    /// Lengths of the fundamental orbits, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.0.bsgs.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of the fundamental orbit lengths.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    /// The same group with different limits (caches are not shared).
    pub fn relimit(&self, limits: Limits) -> Group {
        Group::build(self.degree(), self.generators(), limits).expect("same generators")
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Membership by sifting.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        Ok(self.0.bsgs.contains(p))
    }

    /// Membership for callers that already know the degrees agree.
    #[inline]
    pub(crate) fn includes(&self, p: &Permutation) -> bool {
        debug_assert_eq!(p.degree(), self.degree());
        self.0.bsgs.contains(p)
    }

    /// `self ≤ other`.
    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.includes(g))
    }

    /// Equality as sets of permutations.
    pub fn same_as(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    fn check_cap(&self) -> Result<()> {
        if self.order() > self.limits().enumeration_cap as u64 {
            return Err(Error::CapExceeded {
                order: self.order(),
                cap: self.limits().enumeration_cap,
            });
        }
        Ok(())
    }

    /// Every element exactly once, in an order fixed by the generator list.
    pub fn elements(&self) -> Result<&[Permutation]> {
        self.check_cap()?;
        Ok(self.0.elements.get_or_init(|| self.0.bsgs.enumerate()))
    }

    /// Position of each element within [`Group::elements`].
    pub fn element_index(&self) -> Result<&HashMap<Permutation, u32>> {
        let elements = self.elements()?;
        Ok(self.0.index.get_or_init(|| {
            elements
                .iter()
                .enumerate()
                .map(|(i, x)| (x.clone(), i as u32))
                .collect()
        }))
    }

    /// Orders of the elements, aligned with [`Group::elements`].
    pub fn element_orders(&self) -> Result<&[u64]> {
        let elements = self.elements()?;
        Ok(self
            .0
            .orders
            .get_or_init(|| elements.iter().map(Permutation::order).collect()))
    }

    /// Conjugacy classes as orbits of the conjugation action, ordered by the
    /// position of their first element.
    pub fn conjugacy_classes(&self) -> Result<&[ConjugacyClass]> {
        let index = self.element_index()?;
        let orders = self.element_orders()?;
        let elements = self.elements()?;
        Ok(self.0.classes.get_or_init(|| {
            let mut class_of = vec![u32::MAX; elements.len()];
            let mut classes = Vec::new();
            for start in 0..elements.len() {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                class_of[start] = id;
                let mut members = vec![start];
                let mut head = 0;
                while head < members.len() {
                    let x = &elements[members[head]];
                    head += 1;
                    for g in self.generators() {
                        let y = index[&x.conjugate_by(g)] as usize;
                        if class_of[y] == u32::MAX {
                            class_of[y] = id;
                            members.push(y);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: start,
                    members,
                    element_order: orders[start],
                });
            }
            classes
        }))
    }

    /// `H^g = g⁻¹ H g`.
    pub fn conjugate(&self, g: &Permutation) -> Group {
        let gens: Vec<Permutation> = self.generators().iter().map(|h| h.conjugate_by(g)).collect();
        self.derive(&gens)
    }

    /// Memoizes a derived value on this group. Values are computed outside
    /// the lock; concurrent callers may both compute, and the first insert wins.
    pub(crate) fn memo<T, F>(&self, key: &str, compute: F) -> T
    where
        T: Clone + Send + Sync + 'static,
        F: FnOnce() -> T,
    {
        if let Some(v) = self.0.memo.lock().unwrap().get(key) {
            if let Some(t) = v.downcast_ref::<T>() {
                return t.clone();
            }
        }
        let value = compute();
        let mut guard = self.0.memo.lock().unwrap();
        let stored = guard
            .entry(key.to_string())
            .or_insert_with(|| Arc::new(value.clone()));
        stored.downcast_ref::<T>().cloned().unwrap_or(value)
    }

    /// Memoized fallible computation; errors are not cached.
    pub(crate) fn memo_result<T, F>(&self, key: &str, compute: F) -> Result<T>
    where
        T: Clone + Send + Sync + 'static,
        F: FnOnce() -> Result<T>,
    {
        if let Some(v) = self.0.memo.lock().unwrap().get(key) {
            if let Some(t) = v.downcast_ref::<T>() {
                return Ok(t.clone());
            }
        }
        let value = compute()?;
        Ok(self.memo(key, || value))
    }
}

/// Alias for [`Group::from_generators`].
pub fn group_from_generators(gens: &[Permutation]) -> Result<Group> {
    Group::from_generators(gens)
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(degree {}, order {}, gens [", self.degree(), self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Group", 3)?;
        s.serialize_field("degree", &self.degree())?;
        s.serialize_field("order", &self.order())?;
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        s.serialize_field("generators", &gens)?;
        s.end()
    }
}

/// A subgroup together with the group it was validated against.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    parent: Group,
    subgroup: Group,
}

impl SubgroupHandle {
    pub fn new(parent: &Group, subgroup: &Group) -> Result<Self> {
        if !subgroup.is_subgroup_of(parent) {
            return Err(Error::NotSubgroup(format!(
                "group of order {} is not inside the parent of order {}",
                subgroup.order(),
                parent.order()
            )));
        }
        Ok(SubgroupHandle {
            parent: parent.clone(),
            subgroup: subgroup.clone(),
        })
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn subgroup(&self) -> &Group {
        &self.subgroup
    }

    pub fn index(&self) -> u64 {
        self.parent.order() / self.subgroup.order()
    }
}
