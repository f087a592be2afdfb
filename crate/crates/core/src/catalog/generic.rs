//! Standard families as permutation groups.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

use super::field::Field;

fn bad(msg: String) -> Error {
    Error::Precondition(msg)
}

fn group_of(degree: usize, gens: Vec<Permutation>) -> Result<Group> {
    if gens.is_empty() {
        return Ok(Group::trivial(degree));
    }
    Group::from_generators(&gens)
}

fn images(f: impl Fn(u32) -> u32, degree: usize) -> Permutation {
    Permutation::from_images((0..degree as u32).map(f).collect()).expect("bijection")
}

/// `Z_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(bad("cyclic(0)".into()));
    }
    let n32 = n as u32;
    group_of(n, vec![images(|i| (i + 1) % n32, n)])
}

/// The dihedral group of the given order `2n`, acting on `n` points.
pub fn dihedral(order: usize) -> Result<Group> {
    if !order.is_multiple_of(2) || order < 6 {
        return Err(bad(format!("dihedral group of order {order}")));
    }
    let n = order / 2;
    let n32 = n as u32;
    group_of(
        n,
        vec![images(|i| (i + 1) % n32, n), images(|i| (n32 - i) % n32, n)],
    )
}

pub fn symmetric(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(bad("symmetric(0)".into()));
    }
    if n == 1 {
        return Ok(Group::trivial(1));
    }
    let n32 = n as u32;
    group_of(
        n,
        vec![
            images(|i| [1, 0].get(i as usize).copied().unwrap_or(i), n),
            images(|i| (i + 1) % n32, n),
        ],
    )
}

/// Generated by the 3-cycles `(1 2 k)`.
pub fn alternating(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(bad("alternating(0)".into()));
    }
    let gens = (3..=n)
        .map(|k| Permutation::from_cycles(&[vec![1, 2, k]], n).unwrap())
        .collect();
    group_of(n, gens)
}

/// Acts on the disjoint union of the two domains, `A` first.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let degree = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.embed(0, degree)).collect();
    gens.extend(b.generators().iter().map(|g| g.embed(a.degree(), degree)));
    group_of(degree, gens)
}

/// `{x ↦ ax + b}` on GF(q) with `a` running over the multiplicative subgroup
/// of order `k`; `k = q - 1` gives AGL(1, q).
pub fn affine(q: u32, k: u64) -> Result<Group> {
    let f = Field::new(q)?;
    if !(q as u64 - 1).is_multiple_of(k) {
        return Err(bad(format!("{k} does not divide {}", q - 1)));
    }
    let a = f.pow(f.primitive(), (q as u64 - 1) / k);
    let qs = q as usize;
    let mut gens: Vec<Permutation> = f.basis().iter().map(|&b| images(|x| f.add(x, b), qs)).collect();
    gens.push(images(|x| f.mul(a, x), qs));
    group_of(qs, gens)
}

/// The Galois extension of AGL(1, q): semilinear maps `x ↦ a x^σ + b`.
pub fn affine_semilinear(q: u32) -> Result<Group> {
    let f = Field::new(q)?;
    let p = f.characteristic();
    let qs = q as usize;
    let mut gens: Vec<Permutation> = f.basis().iter().map(|&b| images(|x| f.add(x, b), qs)).collect();
    gens.push(images(|x| f.mul(f.primitive(), x), qs));
    gens.push(images(|x| f.pow(x, p as u64), qs));
    group_of(qs, gens)
}

/// The quaternion group in its regular representation.
pub fn quaternion() -> Result<Group> {
    // Elements ±1, ±i, ±j, ±k as (sign, unit) with units 0..4 = 1, i, j, k.
    let table = |a: u32, b: u32| -> u32 {
        let (sa, ua) = (a / 4, a % 4);
        let (sb, ub) = (b / 4, b % 4);
        let (s, u) = match (ua, ub) {
            (0, u) | (u, 0) => (0, u),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        };
        ((sa + sb + s) % 2) * 4 + u
    };
    group_of(8, vec![images(|x| table(x, 1), 8), images(|x| table(x, 2), 8)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::order_spectrum;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(9).unwrap().order(), 9);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let d18 = dihedral(18).unwrap();
        assert_eq!((d18.order(), d18.degree()), (18, 9));
        assert_eq!(order_spectrum(&d18).unwrap().orders(), vec![1, 2, 3, 9]);
        assert!(dihedral(7).is_err());
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(quaternion().unwrap().order(), 8);
        assert_eq!(order_spectrum(&quaternion().unwrap()).unwrap().count(2), 1);
        assert_eq!(affine(5, 4).unwrap().order(), 20);
        assert_eq!(affine(9, 8).unwrap().order(), 72);
        assert_eq!(affine_semilinear(8).unwrap().order(), 168);
    }

    #[test]
    fn products() {
        let a4 = alternating(4).unwrap();
        let z9 = cyclic(9).unwrap();
        let m = direct_product(&a4, &z9).unwrap();
        assert_eq!((m.order(), m.degree()), (108, 13));
        let t = Group::trivial(1);
        assert_eq!(direct_product(&t, &z9).unwrap().order(), 9);
    }
}
