//! Linear and Suzuki groups in their natural projective actions, and M10.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

use super::field::Field;
use super::LabeledGroup;

type Matrix = Vec<Vec<u32>>;

/// Scales so the first nonzero coordinate is 1.
fn normalize(f: &Field, v: &[u32]) -> Vec<u32> {
    let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
    let s = f.inv(lead);
    v.iter().map(|&x| f.mul(s, x)).collect()
}

/// Row vector times matrix.
fn act(f: &Field, v: &[u32], m: &Matrix) -> Vec<u32> {
    (0..m[0].len())
        .map(|j| v.iter().zip(m).fold(0, |acc, (&x, row)| f.add(acc, f.mul(x, row[j]))))
        .collect()
}

/// The permutation action of matrices on the projective orbit of `start`.
fn projective_action(f: &Field, start: Vec<u32>, mats: &[Matrix]) -> Result<Vec<Permutation>> {
    let start = normalize(f, &start);
    let mut points = vec![start.clone()];
    let mut index: HashMap<Vec<u32>, u32> = HashMap::from([(start, 0)]);
    let mut head = 0;
    while head < points.len() {
        let v = points[head].clone();
        head += 1;
        for m in mats {
            let w = normalize(f, &act(f, &v, m));
            if !index.contains_key(&w) {
                index.insert(w.clone(), points.len() as u32);
                points.push(w);
            }
        }
    }
    mats.iter()
        .map(|m| {
            Permutation::from_images(
                points
                    .iter()
                    .map(|v| index[&normalize(f, &act(f, v, m))])
                    .collect(),
            )
        })
        .collect()
}

fn identity_matrix(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
}

fn elementary(n: usize, i: usize, j: usize, t: u32) -> Matrix {
    let mut m = identity_matrix(n);
    m[i][j] = t;
    m
}

/// Points of the projective line in the order `0, 1, …, q-1, ∞`.
fn line_index(f: &Field, v: &[u32]) -> u32 {
    if v[1] == 0 {
        f.order()
    } else {
        f.mul(v[0], f.inv(v[1]))
    }
}

fn line_action(f: &Field, m: &Matrix) -> Permutation {
    let q = f.order();
    Permutation::from_images(
        (0..=q)
            .map(|x| {
                let v = if x == q { vec![1, 0] } else { vec![x, 1] };
                line_index(f, &act(f, &v, m))
            })
            .collect(),
    )
    .expect("invertible matrix")
}

fn psl2_gens(f: &Field) -> Vec<Permutation> {
    let mut gens = Vec::new();
    for &t in &f.basis() {
        gens.push(line_action(f, &elementary(2, 0, 1, t)));
        gens.push(line_action(f, &elementary(2, 1, 0, t)));
    }
    gens
}

/// PSL(2, q) on the `q + 1` points of the projective line.
pub fn psl2(q: u32) -> Result<Group> {
    let f = Field::new(q)?;
    Group::from_generators(&psl2_gens(&f))
}

/// PSL(2, 9) extended by `v ↦ v^φ · diag(ν, 1)` with `φ` the Frobenius map
/// and `ν` a nonsquare, on the 10 points of the projective line.
pub fn m10() -> Result<LabeledGroup> {
    let f = Field::new(9)?;
    let nu = f.primitive();
    let twist = Permutation::from_images(
        (0..=9).map(|x| if x == 9 { 9 } else { f.mul(nu, f.pow(x, 3)) }).collect(),
    )?;
    let a6_gens = psl2_gens(&f);
    let mut gens = a6_gens.clone();
    gens.push(twist);
    let g = Group::from_generators(&gens)?;
    let a6 = g.subgroup(&a6_gens)?;
    let mut out = LabeledGroup::new("M10", g);
    out.insert("A6", a6);
    Ok(out)
}

/// PSL(3, 4) on the 21 points of the projective plane over GF(4).
pub fn psl3_4() -> Result<Group> {
    let f = Field::new(4)?;
    let mut mats = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                for t in f.basis() {
                    mats.push(elementary(3, i, j, t));
                }
            }
        }
    }
    let gens = projective_action(&f, vec![1, 0, 0], &mats)?;
    Group::from_generators(&gens)
}

/// Sz(8) on the 65 points of its ovoid in PG(3, 8).
pub fn sz8() -> Result<Group> {
    let f = Field::new(8)?;
    // θ: x ↦ x⁴ squares to the Frobenius map on GF(8).
    let th = |x: u32| f.pow(x, 4);
    let s = |a: u32, b: u32| -> Matrix {
        let a2t = f.mul(f.mul(a, a), th(a));
        let c0 = f.add(f.add(a2t, f.mul(a, b)), th(b));
        let c1 = f.add(f.mul(a, th(a)), b);
        vec![
            vec![1, 0, 0, 0],
            vec![a, 1, 0, 0],
            vec![b, th(a), 1, 0],
            vec![c0, c1, a, 1],
        ]
    };
    let l = 2;
    let li = f.inv(l);
    let diag = vec![
        vec![f.pow(l, 3), 0, 0, 0],
        vec![0, f.pow(l, 2), 0, 0],
        vec![0, 0, f.pow(li, 2), 0],
        vec![0, 0, 0, f.pow(li, 3)],
    ];
    let anti: Matrix = (0..4).map(|i| (0..4).map(|j| u32::from(i + j == 3)).collect()).collect();
    let mats = vec![s(1, 0), s(0, 1), s(2, 0), s(4, 0), diag, anti];
    let gens = projective_action(&f, vec![1, 0, 0, 0], &mats)?;
    if gens[0].degree() != 65 {
        return Err(Error::Invariant(format!("ovoid has {} points", gens[0].degree())));
    }
    Group::from_generators(&gens)
}
