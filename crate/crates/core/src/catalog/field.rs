//! Small finite fields as lookup tables.
//!
//! Elements of GF(p^k) are encoded as integers `0..q` whose base-`p` digits
//! are polynomial coefficients, lowest degree first. GF(p) is plain residue
//! arithmetic.

use crate::arith::prime_power_base;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// Monic modulus coefficients, constant term first.
fn modulus(q: u32) -> Option<&'static [u32]> {
    Some(match q {
        4 => &[1, 1, 1],
        8 => &[1, 1, 0, 1],
        9 => &[1, 0, 1],
        16 => &[1, 1, 0, 0, 1],
        25 => &[2, 0, 1],
        27 => &[1, 2, 0, 1],
        32 => &[1, 0, 1, 0, 0, 1],
        64 => &[1, 1, 0, 0, 0, 0, 1],
        _ => return None,
    })
}

fn digits(mut x: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = vec![0; k];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl Field {
    pub fn new(q: u32) -> Result<Field> {
        let p = prime_power_base(q as u64)
            .ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))? as u32;
        let mut k = 0;
        let mut t = q;
        while t > 1 {
            t /= p;
            k += 1;
        }
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        if k == 1 {
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = (a + b) % p;
                    mul[(a * q + b) as usize] = a * b % p;
                }
            }
        } else {
            let m = modulus(q)
                .ok_or_else(|| Error::Precondition(format!("no stored modulus for GF({q})")))?;
            for a in 0..q {
                let da = digits(a, p, k);
                for b in 0..q {
                    let db = digits(b, p, k);
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    add[(a * q + b) as usize] = undigits(&sum, p);
                    let mut prod = vec![0u32; 2 * k - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    for top in (k..prod.len()).rev() {
                        let c = prod[top];
                        if c != 0 {
                            for (i, &mi) in m.iter().enumerate() {
                                let idx = top - k + i;
                                prod[idx] = (prod[idx] + (p - c) * mi) % p;
                            }
                        }
                    }
                    mul[(a * q + b) as usize] = undigits(&prod[..k], p);
                }
            }
        }
        let mut inv = vec![0; n];
        for a in 1..q {
            inv[a as usize] = (1..q)
                .find(|&b| mul[(a * q + b) as usize] == 1)
                .ok_or_else(|| Error::Invariant(format!("GF({q}) modulus is reducible")))?;
        }
        Ok(Field { p, q, add, mul, inv })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn mult_order(&self, a: u32) -> u64 {
        assert!(a != 0);
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The smallest generator of the multiplicative group.
    pub fn primitive(&self) -> u32 {
        (1..self.q)
            .find(|&a| self.mult_order(a) == (self.q - 1) as u64)
            .expect("multiplicative group is cyclic")
    }

    /// An additive basis over the prime field: `1, x, x², …`.
    pub fn basis(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut b = 1;
        while b < self.q {
            out.push(b);
            b *= self.p;
        }
        out
    }

    pub fn is_square(&self, a: u32) -> bool {
        (0..self.q).any(|b| self.mul(b, b) == a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 17, 25, 27, 32, 64] {
            let f = Field::new(q).unwrap();
            let g = f.primitive();
            assert_eq!(f.mult_order(g), (q - 1) as u64, "GF({q})");
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.pow(a, q as u64), a);
            }
        }
        assert!(Field::new(6).is_err());
    }
}
