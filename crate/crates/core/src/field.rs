//! Small finite fields `GF(p^e)`.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! polynomial coefficients, lowest degree first. For `e > 1` the field is
//! `GF(p)[x]` modulo the lexicographically smallest monic irreducible of
//! degree `e`.

use crate::error::{domain, Result};

/// `Some((p, e))` when `q = p^e` with `p` prime and `e >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    e: u32,
    q: u64,
    /// Monic modulus coefficients, lowest degree first, length `e + 1`.
    modulus: Vec<u64>,
}

fn digits(x: u64, p: u64, e: u32) -> Vec<u64> {
    let mut d = Vec::with_capacity(e as usize);
    let mut x = x;
    for _ in 0..e {
        d.push(x % p);
        x /= p;
    }
    d
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo monic `m` over `GF(p)`; both lowest degree first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let off = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[off + i] = (r[off + i] + p - lead * c % p) % p;
            }
        }
    }
    r
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        // every monic divisor candidate of degree d
        for code in 0..p.pow(d as u32) {
            let mut f = digits(code, p, d as u32);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let Some((p, e)) = prime_power(q) else {
            return domain(format!("{q} is not a prime power"));
        };
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            // candidates ordered lexicographically from the x^{e-1} coefficient down
            (0..q)
                .map(|code| {
                    let mut m = digits(code, p, e);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        Ok(FiniteField { p, e, q, modulus })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (digits(a, self.p, self.e), digits(b, self.p, self.e));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        undigits(&s, self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.e == 1 {
            return (self.p - a) % self.p;
        }
        let d: Vec<u64> = digits(a, self.p, self.e)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        undigits(&d, self.p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return a * b % self.p;
        }
        let (da, db) = (digits(a, self.p, self.e), digits(b, self.p, self.e));
        let mut prod = vec![0u64; 2 * self.e as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        undigits(&poly_rem(&prod, &self.modulus, self.p), self.p)
    }

    /// Indicator of nonzero squares, indexed by element code.
    pub fn nonzero_squares(&self) -> Vec<bool> {
        let mut sq = vec![false; self.q as usize];
        for x in 1..self.q {
            sq[self.mul(x, x) as usize] = true;
        }
        sq
    }
}
