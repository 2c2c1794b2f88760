use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{FieldCtx, FieldElem};
use crate::error::Result;

use super::hgroup::pgl2;

/// A point of the projective line: `(x : 1)` or `(1 : 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    Finite(FieldElem),
    Infinity,
}

impl ProjPoint {
    /// Canonical point of the homogeneous pair `(x : y)`; `None` for `(0 : 0)`.
    pub fn from_homogeneous(x: FieldElem, y: FieldElem, k: &FieldCtx) -> Option<Self> {
        if y.is_zero() {
            (!x.is_zero()).then_some(ProjPoint::Infinity)
        } else {
            Some(ProjPoint::Finite(k.div(x, y).expect("y nonzero")))
        }
    }

    /// Dense index in `0..=Q`; infinity is `Q`.
    pub fn index(self, k: &FieldCtx) -> usize {
        match self {
            ProjPoint::Finite(x) => x.index() as usize,
            ProjPoint::Infinity => k.order() as usize,
        }
    }

    pub fn all(k: &FieldCtx) -> impl Iterator<Item = ProjPoint> + '_ {
        k.elements()
            .map(ProjPoint::Finite)
            .chain(std::iter::once(ProjPoint::Infinity))
    }

    /// `z -> (az + b) / (cz + d)`, with `z` mapping to infinity on a pole
    /// and infinity mapping to `a/c` (or to itself when `c = 0`).
    pub fn moebius(self, [a, b, c, d]: [FieldElem; 4], k: &FieldCtx) -> ProjPoint {
        match self {
            ProjPoint::Finite(z) => {
                let num = k.add(k.mul(a, z), b);
                let den = k.add(k.mul(c, z), d);
                ProjPoint::from_homogeneous(num, den, k).expect("nonsingular map")
            }
            ProjPoint::Infinity => ProjPoint::from_homogeneous(a, c, k).expect("nonsingular map"),
        }
    }
}

/// Orbits of `PGL_2(F_q)` on `P^1(F_{q^d})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCensus {
    pub q: u64,
    pub d: u32,
    /// Orbit lengths in order of each orbit's least point.
    pub lengths: Vec<u64>,
}

impl OrbitCensus {
    pub fn orbit_count(&self) -> usize {
        self.lengths.len()
    }

    pub fn point_count(&self) -> u64 {
        self.lengths.iter().sum()
    }

    /// Orbit length -> number of orbits of that length.
    pub fn histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for &l in &self.lengths {
            *h.entry(l).or_insert(0) += 1;
        }
        h
    }
}

pub fn moebius_orbit_census(base: &FieldCtx, d: u32) -> Result<OrbitCensus> {
    let ext = base.extension(d)?;
    // Base elements embed in the extension as the same index.
    let group: Vec<[FieldElem; 4]> = pgl2(base)
        .iter()
        .map(|g| {
            g.entries().clone().map(|e| {
                let c = e.coeff(0);
                ext.elem(c.index()).expect("base embeds in extension")
            })
        })
        .collect();
    let n_points = ext.order() as usize + 1;
    let mut seen = vec![false; n_points];
    let mut lengths = Vec::new();
    for start in ProjPoint::all(&ext) {
        if seen[start.index(&ext)] {
            continue;
        }
        let mut len = 0u64;
        for g in &group {
            let image = start.moebius(*g, &ext);
            let i = image.index(&ext);
            if !seen[i] {
                seen[i] = true;
                len += 1;
            }
        }
        lengths.push(len);
    }
    Ok(OrbitCensus {
        q: base.order() as u64,
        d,
        lengths,
    })
}
