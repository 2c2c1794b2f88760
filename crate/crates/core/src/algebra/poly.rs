//! Dense polynomials over a [`FieldCtx`].

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::field::{FieldCtx, FieldElem};
use crate::error::{Error, Result};

/// Degree of a polynomial; the zero polynomial has degree `NegInf`, which
/// compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `i64::MIN` stands in for minus infinity.
    pub fn as_i64(self) -> i64 {
        match self {
            Degree::NegInf => i64::MIN,
            Degree::Finite(d) => d as i64,
        }
    }

    /// `deg <= bound`; always true for the zero polynomial.
    pub fn at_most(self, bound: i64) -> bool {
        match self {
            Degree::NegInf => true,
            Degree::Finite(d) => (d as i64) <= bound,
        }
    }
}

/// Coefficients low degree first, never with a trailing zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::ONE)
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(FieldElem::ONE, 1)
    }

    pub fn monomial(c: FieldElem, exp: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds from small integers taken in the prime subfield, low degree first.
    pub fn from_ints(k: &FieldCtx, ints: &[i64]) -> Self {
        Self::from_coeffs(ints.iter().map(|&i| k.from_int(i)).collect())
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lead(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self, k: &FieldCtx) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = k.add(*c, s);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self, k: &FieldCtx) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self, k: &FieldCtx) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| k.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: FieldElem, k: &FieldCtx) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|&x| k.mul(x, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, k: &FieldCtx) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = k.add(coeffs[i + j], k.mul(a, b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32, k: &FieldCtx) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self, k))
    }

    /// Euclidean division: `(quot, rem)` with `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Self, k: &FieldCtx) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dl = divisor.coeffs.len();
        if self.coeffs.len() < dl {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lead = k.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElem::ZERO; rem.len() - dl + 1];
        for top in (dl - 1..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let factor = k.mul(c, inv_lead);
            let shift = top + 1 - dl;
            quot[shift] = factor;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = k.sub(rem[shift + j], k.mul(factor, dc));
            }
        }
        rem.truncate(dl - 1);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self, k: &FieldCtx) -> Result<Self> {
        Ok(self.divmod(divisor, k)?.1)
    }

    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Self, k: &FieldCtx) -> Option<Self> {
        let (q, r) = self.divmod(divisor, k).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, k: &FieldCtx) -> Self {
        match k.inv(self.lead()) {
            Ok(inv) => self.scale(inv, k),
            Err(_) => Self::zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self, k: &FieldCtx) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, k).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn eval(&self, x: FieldElem, k: &FieldCtx) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// True iff `self` has no factor of degree strictly between 0 and its own.
    /// Decided by trial division against every monic polynomial of degree at
    /// most half of `deg self`.
    pub fn is_irreducible(&self, k: &FieldCtx) -> Result<bool> {
        let d = match self.degree() {
            Degree::NegInf => return Err(Error::ZeroPolynomial),
            Degree::Finite(0) => return Ok(false),
            Degree::Finite(d) => d,
        };
        for j in 1..=d / 2 {
            let space = PolySpace::new(k, j as i64 - 1);
            for i in 0..space.len() {
                let divisor = space.get(i).add(&Self::monomial(FieldElem::ONE, j), k);
                if self.rem(&divisor, k)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Compares by degree first, then coefficient-wise from the top in
    /// element enumeration order.
    pub fn cmp_graded(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

/// All polynomials of degree at most `max_deg`, addressable by index.
///
/// Index `i` has coefficient of `t^j` equal to the `j`-th base-`q` digit of
/// `i`, so `(q=2, max_deg=1)` lists `0, 1, t, t+1`.
#[derive(Clone, Debug)]
pub struct PolySpace<'a> {
    k: &'a FieldCtx,
    len_coeffs: usize,
    size: u64,
}

impl<'a> PolySpace<'a> {
    /// A negative bound yields the space `{0}`.
    pub fn new(k: &'a FieldCtx, max_deg: i64) -> Self {
        let len_coeffs = if max_deg < 0 { 0 } else { max_deg as usize + 1 };
        let size = (k.order() as u64)
            .checked_pow(len_coeffs as u32)
            .expect("polynomial space size overflows u64");
        Self {
            k,
            len_coeffs,
            size,
        }
    }

    pub fn len(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, mut index: u64) -> Poly {
        let q = self.k.order() as u64;
        let mut coeffs = Vec::with_capacity(self.len_coeffs);
        for _ in 0..self.len_coeffs {
            coeffs.push(self.k.elem((index % q) as u32).expect("digit below q"));
            index /= q;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn iter(&self) -> impl Iterator<Item = Poly> + '_ {
        (0..self.size).map(move |i| self.get(i))
    }
}

/// Every polynomial of degree at most `max_deg` (just `[0]` when negative).
pub fn enumerate_polys(k: &FieldCtx, max_deg: i64) -> Vec<Poly> {
    PolySpace::new(k, max_deg).iter().collect()
}

/// All monic irreducibles of degree `d`, ordered lexicographically by their
/// coefficients from `t^(d-1)` downwards.
pub fn enumerate_monic_irreducibles(k: &FieldCtx, d: usize) -> Vec<Poly> {
    if d == 0 {
        return Vec::new();
    }
    let lead = Poly::monomial(FieldElem::ONE, d);
    PolySpace::new(k, d as i64 - 1)
        .iter()
        .map(|low| low.add(&lead, k))
        .filter(|f| f.is_irreducible(k).unwrap_or(false))
        .collect()
}
