//! Finite fields `F_q` for any prime power `q`.
//!
//! Elements are stored as their index in a fixed enumeration: the index is
//! the base-`p` encoding of the coordinate vector over the prime field, so
//! `0` is zero, `1` is one, and `0..p` is the prime subfield. An extension
//! of a field of order `Q` encodes `c_0 + c_1 t + ...` as `sum c_i Q^i`,
//! which keeps the base field embedded as the indices `0..Q`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::poly::{enumerate_monic_irreducibles, Poly};
use crate::error::{Error, Result};

/// Largest field order we build tables for.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fields up to this order get full addition and multiplication tables.
const FULL_TABLE_ORDER: u32 = 256;

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
    mul: Option<Vec<u32>>,
}

/// A finite field context. Cheap to clone.
#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    prime_degree: u32,
    order: u32,
    base_order: u32,
    modulus: Option<Arc<Vec<FieldElem>>>,
    tables: Arc<Tables>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.order == other.order
            && self.base_order == other.base_order
            && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("order", &self.order)
            .field("base_order", &self.base_order)
            .field("modulus", &self.modulus)
            .finish()
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Splits `q` into `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|i| q.is_multiple_of(*i))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

impl FieldCtx {
    /// The field of order `q`. Non-prime `q` is realized over `F_p` with the
    /// lexicographically first monic irreducible as modulus.
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q as u128));
        }
        let prime = Self::prime(p)?;
        if e == 1 {
            Ok(prime)
        } else {
            prime.extension(e)
        }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(p as u128));
        }
        let p32 = p as u32;
        let tables = build_tables(p32, p32, |a, b| ((a as u64 * b as u64) % p) as u32);
        Ok(Self {
            p: p32,
            prime_degree: 1,
            order: p32,
            base_order: p32,
            modulus: None,
            tables: Arc::new(tables),
        })
    }

    /// Degree-`d` extension `F_q[t]/(g)` where `g` is the first monic
    /// irreducible of degree `d` in enumeration order. `d = 1` returns `self`.
    pub fn extension(&self, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if d == 1 {
            return Ok(self.clone());
        }
        let order = (self.order as u128).pow(d);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(order));
        }
        let modulus = enumerate_monic_irreducibles(self, d as usize)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Invariant(format!("no irreducible of degree {d}")))?;
        self.extension_by(&modulus)
    }

    /// Quotient `F_q[t]/(g)` for a given monic irreducible `g`.
    pub fn extension_by(&self, modulus: &Poly) -> Result<Self> {
        let d = match modulus.degree().finite() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::InvalidDegree(modulus.degree().as_i64())),
        };
        if !modulus.is_monic() {
            return Err(Error::NotMonic(modulus.to_string_in(self)));
        }
        if !modulus.is_irreducible(self)? {
            return Err(Error::NotIrreducible(modulus.to_string_in(self)));
        }
        if d == 1 {
            return Ok(self.clone());
        }
        let order = (self.order as u128).pow(d as u32);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(order));
        }
        let order = order as u32;
        let base = self.clone();
        let m: Vec<FieldElem> = modulus.coeffs().to_vec();
        let q = self.order;
        let mul = |a: u32, b: u32| -> u32 {
            let da = digits(a, q, d);
            let db = digits(b, q, d);
            let mut prod = vec![FieldElem::ZERO; 2 * d - 1];
            for (i, &x) in da.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = base.add(prod[i + j], base.mul(x, y));
                }
            }
            // reduce by the monic modulus, top down
            for top in (d..prod.len()).rev() {
                let c = prod[top];
                if c.is_zero() {
                    continue;
                }
                for (k, &mk) in m.iter().enumerate().take(d) {
                    let idx = top - d + k;
                    prod[idx] = base.sub(prod[idx], base.mul(c, mk));
                }
                prod[top] = FieldElem::ZERO;
            }
            undigits(&prod[..d], q)
        };
        let tables = build_tables(self.p, order, mul);
        Ok(Self {
            p: self.p,
            prime_degree: self.prime_degree * d as u32,
            order,
            base_order: q,
            modulus: Some(Arc::new(m)),
            tables: Arc::new(tables),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// `q`, the number of elements.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree over the prime field.
    pub fn prime_degree(&self) -> u32 {
        self.prime_degree
    }

    /// Order of the field this one was built over (itself for prime fields).
    pub fn base_order(&self) -> u32 {
        self.base_order
    }

    /// Defining polynomial over the base field, low coefficient first.
    pub fn modulus(&self) -> Option<&[FieldElem]> {
        self.modulus.as_deref().map(Vec::as_slice)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (0..self.order).map(FieldElem)
    }

    pub fn units(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (1..self.order).map(FieldElem)
    }

    pub fn elem(&self, index: u32) -> Option<FieldElem> {
        (index < self.order).then_some(FieldElem(index))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.p as i64) as u32)
    }

    /// Coordinates over `F_p`, length `prime_degree`.
    pub fn prime_coords(&self, x: FieldElem) -> Vec<u32> {
        let mut v = x.0;
        (0..self.prime_degree)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    pub fn from_prime_coords(&self, coords: &[u32]) -> Result<FieldElem> {
        if coords.len() > self.prime_degree as usize {
            return Err(Error::Parse(format!(
                "expected at most {} coordinates, got {}",
                self.prime_degree,
                coords.len()
            )));
        }
        let mut idx: u32 = 0;
        for &c in coords.iter().rev() {
            if c >= self.p {
                return Err(Error::Parse(format!(
                    "coordinate {c} not reduced mod {}",
                    self.p
                )));
            }
            idx = idx * self.p + c;
        }
        Ok(FieldElem(idx))
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if let Some(t) = &self.tables.add {
            return FieldElem(t[(a.0 * self.order + b.0) as usize]);
        }
        FieldElem(add_digitwise(self.p, a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        let (mut v, mut out, mut scale) = (a.0, 0u32, 1u32);
        while v > 0 {
            let c = v % self.p;
            out += ((self.p - c) % self.p) * scale;
            v /= self.p;
            scale = scale.wrapping_mul(self.p);
        }
        FieldElem(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if let Some(t) = &self.tables.mul {
            return FieldElem(t[(a.0 * self.order + b.0) as usize]);
        }
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let n = self.order - 1;
        let l = (self.tables.log[a.0 as usize] + self.tables.log[b.0 as usize]) % n;
        FieldElem(self.tables.exp[l as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let n = self.order - 1;
        let l = (n - self.tables.log[a.0 as usize]) % n;
        Ok(FieldElem(self.tables.exp[l as usize]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.0 == 0 {
            return FieldElem::ZERO;
        }
        let n = (self.order - 1) as u64;
        let l = (self.tables.log[a.0 as usize] as u64 * (e % n)) % n;
        FieldElem(self.tables.exp[l as usize])
    }

    /// Formats an element: a residue for prime fields, a bracketed
    /// coordinate vector over `F_p` otherwise.
    pub fn format_elem(&self, x: FieldElem) -> String {
        if self.prime_degree == 1 {
            x.0.to_string()
        } else {
            let parts: Vec<String> = self.prime_coords(x).iter().map(u32::to_string).collect();
            format!("[{}]", parts.join(","))
        }
    }
}

fn add_digitwise(p: u32, a: u32, b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b, mut out, mut scale) = (a, b, 0u32, 1u32);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale = scale.wrapping_mul(p);
    }
    out
}

fn digits(x: u32, base: u32, len: usize) -> Vec<FieldElem> {
    let mut v = x;
    (0..len)
        .map(|_| {
            let c = v % base;
            v /= base;
            FieldElem(c)
        })
        .collect()
}

fn undigits(ds: &[FieldElem], base: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, c| acc * base + c.0)
}

/// Builds discrete log tables from a raw multiplication and, for small
/// fields, full operation tables.
fn build_tables(p: u32, order: u32, mul: impl Fn(u32, u32) -> u32) -> Tables {
    let n = order - 1;
    let mut exp = Vec::with_capacity(n.max(1) as usize);
    let mut log = vec![0u32; order as usize];
    if n <= 1 {
        exp.push(1);
    } else {
        for g in 2..order {
            exp.clear();
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = mul(x, g);
                if x == 1 || exp.len() > n as usize {
                    break;
                }
            }
            if exp.len() == n as usize {
                break;
            }
        }
        assert_eq!(exp.len(), n as usize, "multiplicative group must be cyclic");
    }
    for (i, &x) in exp.iter().enumerate() {
        log[x as usize] = i as u32;
    }
    let (add, mul_t) = if order <= FULL_TABLE_ORDER {
        let mut add = vec![0u32; (order * order) as usize];
        let mut mt = vec![0u32; (order * order) as usize];
        for a in 0..order {
            for b in 0..order {
                let i = (a * order + b) as usize;
                add[i] = add_digitwise(p, a, b);
                mt[i] = if a == 0 || b == 0 {
                    0
                } else {
                    exp[((log[a as usize] + log[b as usize]) % n.max(1)) as usize]
                };
            }
        }
        (Some(add), Some(mt))
    } else {
        (None, None)
    };
    Tables {
        exp,
        log,
        add,
        mul: mul_t,
    }
}
