//! The two iterated-triple examples.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::structure::{join, normal_closure, p_residual, sylow};

use super::field::Field;
use super::LabeledGroup;

fn cyc(cycles: &[&[usize]], degree: usize) -> Permutation {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(&cycles, degree).expect("static cycles")
}

/// `(A4 × Z9) ⋊ ⟨σ⟩` on 13 points: A4 on 1..4, Z9 on 5..13, and `σ` a
/// transposition on the first block times the inversion of Z9.
pub fn example_g1() -> Result<LabeledGroup> {
    let three = cyc(&[&[1, 2, 3]], 13);
    let v1 = cyc(&[&[1, 2], &[3, 4]], 13);
    let v2 = cyc(&[&[1, 3], &[2, 4]], 13);
    let z9 = cyc(&[&[5, 6, 7, 8, 9, 10, 11, 12, 13]], 13);
    let sigma = cyc(&[&[1, 2], &[6, 13], &[7, 12], &[8, 11], &[9, 10]], 13);
    let g = Group::from_generators(&[three.clone(), v1.clone(), z9.clone(), sigma.clone()])?;
    let sub = |gens: &[&Permutation]| -> Result<Group> {
        let gens: Vec<Permutation> = gens.iter().map(|&x| x.clone()).collect();
        g.subgroup(&gens)
    };
    let mut out = LabeledGroup::new("G1", g.clone());
    out.insert("K1", sub(&[&v1, &v2])?);
    out.insert("N1", sub(&[&v1, &v2, &z9])?);
    out.insert("M1", sub(&[&three, &v1, &z9])?);
    out.insert("P1", sub(&[&v1, &v2, &sigma])?);
    out.insert("Q1", sub(&[&three, &z9])?);
    out.insert("Z9", sub(&[&z9])?);
    Ok(out)
}

/// `(Z2^6 × Z2^2) ⋊ (Z9 ⋊ Z2)` on 64 + 4 points.
///
/// Points `0..64` are GF(64); points `64..68` are the subfield GF(4) inside
/// it. Z9 is multiplication by an element `ω` of order 9 on GF(64) and by
/// `ω³` on GF(4), so its subgroup of order 3 acts trivially on the small
/// block. The involution is `x ↦ x⁸` on both blocks and inverts `ω`.
pub fn example_g2() -> Result<LabeledGroup> {
    let f = Field::new(64)?;
    let g0 = f.primitive();
    let omega = f.pow(g0, 7);
    let small: Vec<u32> = (0..64).filter(|&x| f.pow(x, 4) == x).collect();
    let slot = |x: u32| -> u32 { 64 + small.iter().position(|&y| y == x).expect("subfield") as u32 };
    let perm = |big: &dyn Fn(u32) -> u32, tiny: &dyn Fn(u32) -> u32| -> Permutation {
        let mut images: Vec<u32> = (0..64).map(big).collect();
        images.extend(small.iter().map(|&y| slot(tiny(y))));
        Permutation::from_images(images).expect("bijection")
    };
    let id = |x: u32| x;
    let omega3 = f.pow(omega, 3);
    let a = perm(&|x| f.add(x, 1), &id);
    let b = perm(&id, &|y| f.add(y, 1));
    let z = perm(&|x| f.mul(omega, x), &|y| f.mul(omega3, y));
    let r = perm(&|x| f.pow(x, 8), &|y| f.pow(y, 8));

    let z3 = z.pow(3);
    if z3.images()[64..].iter().enumerate().any(|(i, &v)| v != 64 + i as u32) {
        return Err(Error::Invariant("Z3 does not act trivially on the small block".into()));
    }
    if (0..64).any(|x| x != 0 && f.mul(omega, x) == x) || f.mult_order(omega) != 9 {
        return Err(Error::Invariant("Z9 does not act fixed-point-freely".into()));
    }

    let g = Group::from_generators(&[a.clone(), b.clone(), z.clone(), r])?;
    let c1 = normal_closure(&g, &[b])?;
    let c2 = normal_closure(&g, &[a])?;
    let l2 = join(&c1, &c2);
    let n2 = g.subgroup(&extend(&l2, &z3))?;
    let m2 = g.subgroup(&extend(&l2, &z))?;
    let q2 = g.subgroup(&[z])?;
    let qstar = g.subgroup(&[z3])?;
    let p2 = sylow(&g, 2)?;
    let k = join(&n2, &p_residual(&m2, 3)?);
    let mut out = LabeledGroup::new("G2", g);
    out.insert("C1", c1);
    out.insert("C2", c2);
    out.insert("L2", l2);
    out.insert("N2", n2);
    out.insert("M2", m2);
    out.insert("K", k);
    out.insert("P2", p2);
    out.insert("Q2", q2);
    out.insert("Qstar", qstar);
    Ok(out)
}

fn extend(h: &Group, x: &Permutation) -> Vec<Permutation> {
    let mut gens = h.generators().to_vec();
    gens.push(x.clone());
    gens
}

/// `G2/C1 ≅ Z2^6 ⋊ D18`, the 2-Frobenius group acting on GF(64) alone.
pub fn two_frobenius_1152() -> Result<Group> {
    let f = Field::new(64)?;
    let omega = f.pow(f.primitive(), 7);
    let on = |h: &dyn Fn(u32) -> u32| {
        Permutation::from_images((0..64).map(h).collect()).expect("bijection")
    };
    Group::from_generators(&[
        on(&|x| f.add(x, 1)),
        on(&|x| f.mul(omega, x)),
        on(&|x| f.pow(x, 8)),
    ])
}
