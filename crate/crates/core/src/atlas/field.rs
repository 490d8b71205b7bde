//! Small finite fields as explicit addition and multiplication tables.
//!
//! Element `a` of `F_{p^k}` encodes the polynomial whose base-`p` digits are
//! its coefficients (least significant digit = constant term).

use crate::error::{GroupError, Result};
use crate::pi::factorize;

#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    k: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    primitive: u8,
}

fn digits(mut a: usize, p: usize, k: u32) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product table of `F_p[x] / (x^k + c_{k-1} x^{k-1} + … + c_0)`.
fn product_table(q: usize, p: usize, k: u32, low: &[usize]) -> Vec<u8> {
    let k = k as usize;
    let mut t = vec![0u8; q * q];
    for a in 0..q {
        let da = digits(a, p, k as u32);
        for b in 0..q {
            let db = digits(b, p, k as u32);
            let mut prod = vec![0usize; 2 * k];
            for i in 0..k {
                for j in 0..k {
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                }
            }
            for deg in (k..2 * k).rev() {
                let c = prod[deg];
                if c == 0 {
                    continue;
                }
                prod[deg] = 0;
                // x^deg = x^(deg-k) * x^k and x^k = -Σ low[i] x^i
                for (i, &l) in low.iter().enumerate() {
                    let idx = deg - k + i;
                    prod[idx] = (prod[idx] + p * p - (c * l) % p) % p;
                }
            }
            t[a * q + b] = undigits(&prod[..k], p) as u8;
        }
    }
    t
}

impl FiniteField {
    /// `F_q` for a prime power `q < 256`.
    pub fn new(q: usize) -> Result<FiniteField> {
        let f = factorize(q as u64);
        let parts: Vec<_> = f.iter().copied().collect();
        if !(2..=255).contains(&q) || parts.len() != 1 {
            return Err(GroupError::Unsupported(format!("finite field of order {q}")));
        }
        let (p, k) = (parts[0].0 as usize, parts[0].1);
        let mut add = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s, p) as u8;
            }
        }
        // first monic modulus whose quotient ring has no zero divisors
        let mul = (0..p.pow(k))
            .map(|c| digits(c, p, k))
            .map(|low| product_table(q, p, k, &low))
            .find(|t| (1..q).all(|a| (1..q).all(|b| t[a * q + b] != 0)))
            .expect("an irreducible polynomial exists");
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8
                }
            })
            .collect();
        let mut field = FiniteField {
            q,
            p,
            k,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        field.primitive = (1..q)
            .find(|&a| field.multiplicative_order(a as u8) == q - 1)
            .expect("multiplicative group is cyclic") as u8;
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> u8 {
        self.primitive
    }

    pub fn pow(&self, a: u8, e: usize) -> u8 {
        (0..e).fold(1u8, |acc, _| self.mul(acc, a))
    }

    pub fn multiplicative_order(&self, a: u8) -> usize {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Exhaustive check of the field axioms.
    pub fn check_axioms(&self) -> bool {
        let q = self.q as u8;
        let all = || 0..q;
        all().all(|a| {
            self.add(a, 0) == a
                && self.mul(a, 1) == a
                && self.add(a, self.neg(a)) == 0
                && (a == 0 || self.mul(a, self.inv(a).unwrap()) == 1)
                && all().all(|b| {
                    self.add(a, b) == self.add(b, a)
                        && self.mul(a, b) == self.mul(b, a)
                        && all().all(|c| {
                            self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                                && self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                                && self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
                        })
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_is_integers_mod_p() {
        let f = FiniteField::new(5).unwrap();
        for a in 0..5u8 {
            for b in 0..5u8 {
                assert_eq!(f.add(a, b), (a + b) % 5);
                assert_eq!(f.mul(a, b), (a * b) % 5);
            }
        }
    }

    #[test]
    fn extension_fields_satisfy_axioms() {
        for q in [4, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            assert!(f.check_axioms(), "F_{q}");
            assert_eq!(f.multiplicative_order(f.primitive()), q - 1);
        }
    }

    #[test]
    fn f9_square_roots_of_minus_one() {
        // over F_3, x^2 + 1 has no root, so -1 is a non-square in F_3 but a
        // square in F_9
        let f = FiniteField::new(9).unwrap();
        let minus_one = f.neg(1);
        let roots = (0..9u8).filter(|&a| f.mul(a, a) == minus_one).count();
        assert_eq!(roots, 2);
        assert_eq!(f.characteristic(), 3);
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn unsupported_orders() {
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(1).is_err());
        assert!(FiniteField::new(256).is_err());
    }
}
