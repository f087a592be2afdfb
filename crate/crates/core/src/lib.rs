//! Permutation groups, Frobenius–Wielandt triples and verifiers for groups
//! whose elements outside a normal subgroup have prime-power order.

pub mod arith;
mod bsgs;
pub mod catalog;
pub mod error;
pub mod frobwield;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod spectrum;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
pub use group::{group_from_generators, ConjugacyClass, Group, Limits, SubgroupHandle};
pub use perm::Permutation;
