use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_matrix, FieldCtx, Place, Poly};
use crate::error::{Error, Result};

/// Canonical representative of an element of `PGL_2(F_q(t))` with
/// polynomial entries `[[alpha, beta], [gamma, delta]]`.
///
/// Entries are jointly coprime, and the first nonzero coefficient found by
/// scanning `alpha, beta, gamma, delta` (each from its top degree down) is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjMat {
    entries: [Poly; 4],
}

impl ProjMat {
    pub fn identity() -> Self {
        Self {
            entries: [Poly::one(), Poly::zero(), Poly::zero(), Poly::one()],
        }
    }

    /// Reduces a raw matrix to its canonical representative.
    pub fn canonicalize(raw: [Poly; 4], k: &FieldCtx) -> Result<Self> {
        if det_of(&raw, k).is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self::normalize(raw, k))
    }

    /// Like [`ProjMat::canonicalize`] for a matrix already known to be nonsingular.
    pub(crate) fn normalize(mut raw: [Poly; 4], k: &FieldCtx) -> Self {
        let content = content_of(&raw, k);
        if !content.is_one() {
            for e in raw.iter_mut() {
                *e = e
                    .div_exact(&content, k)
                    .expect("content divides every entry");
            }
        }
        let lead = raw
            .iter()
            .find(|e| !e.is_zero())
            .expect("nonsingular matrix has a nonzero entry")
            .lead();
        if !lead.is_one() {
            let inv = k.inv(lead).expect("leading coefficient is nonzero");
            for e in raw.iter_mut() {
                *e = e.scale(inv, k);
            }
        }
        Self { entries: raw }
    }

    /// Wraps entries that the caller guarantees are already canonical.
    pub(crate) fn from_canonical(entries: [Poly; 4]) -> Self {
        Self { entries }
    }

    /// True iff `raw` is already in canonical form (ignores the determinant).
    pub fn is_canonical(raw: &[Poly; 4], k: &FieldCtx) -> bool {
        match raw.iter().find(|e| !e.is_zero()) {
            Some(first) => first.lead().is_one() && content_of(raw, k).is_one(),
            None => false,
        }
    }

    pub fn parse(s: &str, k: &FieldCtx) -> Result<Self> {
        Self::canonicalize(parse_matrix(s, k)?, k)
    }

    pub fn entries(&self) -> &[Poly; 4] {
        &self.entries
    }

    pub fn alpha(&self) -> &Poly {
        &self.entries[0]
    }

    pub fn beta(&self) -> &Poly {
        &self.entries[1]
    }

    pub fn gamma(&self) -> &Poly {
        &self.entries[2]
    }

    pub fn delta(&self) -> &Poly {
        &self.entries[3]
    }

    pub fn det(&self, k: &FieldCtx) -> Poly {
        det_of(&self.entries, k)
    }

    pub fn mul(&self, other: &Self, k: &FieldCtx) -> Self {
        Self::normalize(mul_raw(&self.entries, &other.entries, k), k)
    }

    /// Inverse through the adjugate `[[delta, -beta], [-gamma, alpha]]`.
    pub fn inv(&self, k: &FieldCtx) -> Self {
        let [a, b, c, d] = &self.entries;
        Self::normalize([d.clone(), b.neg(k), c.neg(k), a.clone()], k)
    }

    /// Tree distance from `x0` to its image: `nu_p(det M)` for content-free `M`.
    pub fn bt_distance(&self, place: &Place) -> u32 {
        place
            .nu(&self.det(place.field()))
            .expect("canonical matrices are nonsingular")
    }

    pub fn to_string_in(&self, k: &FieldCtx) -> String {
        let e: Vec<String> = self.entries.iter().map(|p| p.to_string_in(k)).collect();
        let mut s = String::new();
        write!(s, "[[{},{}],[{},{}]]", e[0], e[1], e[2], e[3]).expect("write to String");
        s
    }
}

pub(crate) fn det_of(m: &[Poly; 4], k: &FieldCtx) -> Poly {
    m[0].mul(&m[3], k).sub(&m[1].mul(&m[2], k), k)
}

pub(crate) fn mul_raw(a: &[Poly; 4], b: &[Poly; 4], k: &FieldCtx) -> [Poly; 4] {
    [
        a[0].mul(&b[0], k).add(&a[1].mul(&b[2], k), k),
        a[0].mul(&b[1], k).add(&a[1].mul(&b[3], k), k),
        a[2].mul(&b[0], k).add(&a[3].mul(&b[2], k), k),
        a[2].mul(&b[1], k).add(&a[3].mul(&b[3], k), k),
    ]
}

fn content_of(m: &[Poly; 4], k: &FieldCtx) -> Poly {
    let mut g = Poly::zero();
    for e in m {
        if e.is_zero() {
            continue;
        }
        if e.is_constant() {
            return Poly::one();
        }
        g = g.gcd(e, k);
        if g.is_one() {
            break;
        }
    }
    g
}
