//! Closed-form quotient graphs of the arithmetic group acting on the tree.
//!
//! `GammaTilde` is the quotient by the stabilizer of `y_0`; for odd `d` it
//! coincides with `Gamma`, for even `d` the `Gamma` quotient is its
//! bipartite double cover with vertices `X_n` and `X_n'`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projective::h_group_order;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Gamma,
    GammaTilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexLabel {
    pub n: u32,
    pub primed: bool,
}

impl VertexLabel {
    pub fn plain(n: u32) -> Self {
        Self { n, primed: false }
    }

    pub fn primed(n: u32) -> Self {
        Self { n, primed: true }
    }

    pub fn flip(self) -> Self {
        Self {
            n: self.n,
            primed: !self.primed,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}{}", self.n, if self.primed { "'" } else { "" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    #[serde(flatten)]
    pub label: VertexLabel,
    pub stabilizer_order: u64,
    /// Set on double-cover vertices, whose orders are copied from `GammaTilde`.
    #[serde(default)]
    pub stabilizer_inherited: bool,
    /// The vertex's `+d` chain edge leaves the window.
    pub frontier: bool,
}

/// A bundle of `mult` parallel edges, stored with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub a: VertexLabel,
    pub b: VertexLabel,
    pub mult: u64,
}

impl Edge {
    pub fn new(u: VertexLabel, v: VertexLabel, mult: u64) -> Self {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        Self { a, b, mult }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientGraph {
    pub q: u64,
    pub d: u32,
    pub variant: Variant,
    pub window: u32,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl QuotientGraph {
    pub fn vertex(&self, label: VertexLabel) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.label == label)
    }

    /// Multiplicity of the bundle between `u` and `v` (0 if absent).
    pub fn multiplicity(&self, u: VertexLabel, v: VertexLabel) -> u64 {
        let e = Edge::new(u, v, 0);
        self.edges
            .iter()
            .find(|x| x.a == e.a && x.b == e.b)
            .map_or(0, |x| x.mult)
    }

    pub fn total_edges(&self) -> u64 {
        self.edges.iter().map(|e| e.mult).sum()
    }

    pub fn frontier(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        self.vertices.iter().filter(|v| v.frontier).map(|v| v.label)
    }

    /// True iff every edge joins a primed and an unprimed vertex.
    pub fn is_bipartite_by_primes(&self) -> bool {
        self.edges.iter().all(|e| e.a.primed != e.b.primed)
    }
}

fn checked_pow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e)
        .ok_or(Error::Overflow("closed-form multiplicity"))
}

/// Number of quotient edges between `X_a` and `X_b` (unordered).
///
/// | condition (a <= b)              | edges                     |
/// |---------------------------------|---------------------------|
/// | `a + b` and `d` differ in parity | 0                        |
/// | `b - a = d` or `a + b = d`       | 1                        |
/// | `a + b > d` otherwise            | 0                        |
/// | `a + b < d`, `a >= 1`            | `q^(2l-1) + q^(2l-2)`    |
/// | `a + b < d`, `a = 0 < b`         | `q^(2l-2)`               |
/// | `a = b = 0`                      | `q (q^(d-3) + 1)/(q + 1)`, or 1 for `d = 2` |
///
/// with `l = (d - a - b) / 2`.
pub fn closed_form_multiplicity(q: u64, d: u32, a: u32, b: u32) -> Result<u64> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if !(a + b + d).is_multiple_of(2) {
        return Ok(0);
    }
    if b - a == d || a + b == d {
        return Ok(1);
    }
    if a + b > d {
        return Ok(0);
    }
    let l = (d - a - b) / 2;
    if a >= 1 {
        return Ok(checked_pow(q, 2 * l - 1)? + checked_pow(q, 2 * l - 2)?);
    }
    if b > 0 {
        return checked_pow(q, 2 * l - 2);
    }
    loop_multiplicity(q, d)
}

/// `q (q^(d-3) + 1) / (q + 1)` for even `d >= 4`, and 1 for `d = 2`.
pub fn loop_multiplicity(q: u64, d: u32) -> Result<u64> {
    if !d.is_multiple_of(2) {
        return Ok(0);
    }
    if d == 2 {
        return Ok(1);
    }
    let num = checked_pow(q, d - 3)? + 1;
    if num % (q + 1) != 0 {
        return Err(Error::Invariant(format!(
            "q + 1 = {} does not divide q^(d-3) + 1 = {num}",
            q + 1
        )));
    }
    (num / (q + 1))
        .checked_mul(q)
        .ok_or(Error::Overflow("loop multiplicity"))
}

pub fn build_quotient(q: u64, d: u32, window: u32, variant: Variant) -> Result<QuotientGraph> {
    if d == 0 {
        return Err(Error::InvalidDegree(0));
    }
    if window < d {
        return Err(Error::WindowTooSmall { window, d });
    }
    let tilde = build_tilde(q, d, window)?;
    match (variant, d.is_multiple_of(2)) {
        (Variant::GammaTilde, _) => Ok(tilde),
        (Variant::Gamma, true) => double_cover(&tilde),
        (Variant::Gamma, false) => Ok(QuotientGraph {
            variant: Variant::Gamma,
            ..tilde
        }),
    }
}

fn build_tilde(q: u64, d: u32, window: u32) -> Result<QuotientGraph> {
    let step = if d.is_multiple_of(2) { 2 } else { 1 };
    let indices: Vec<u32> = (0..=window).step_by(step).collect();
    let mut vertices = Vec::with_capacity(indices.len());
    for &n in &indices {
        vertices.push(Vertex {
            label: VertexLabel::plain(n),
            stabilizer_order: h_group_order(q, n).ok_or(Error::Overflow("stabilizer order"))?,
            stabilizer_inherited: false,
            frontier: n + d > window,
        });
    }
    let mut edges = Vec::new();
    for (i, &a) in indices.iter().enumerate() {
        for &b in &indices[i..] {
            let mult = closed_form_multiplicity(q, d, a, b)?;
            if mult == 0 {
                continue;
            }
            if a == b && !d.is_multiple_of(2) {
                return Err(Error::Invariant(format!("loop at X{a} for odd d = {d}")));
            }
            edges.push(Edge::new(
                VertexLabel::plain(a),
                VertexLabel::plain(b),
                mult,
            ));
        }
    }
    edges.sort();
    Ok(QuotientGraph {
        q,
        d,
        variant: Variant::GammaTilde,
        window,
        vertices,
        edges,
    })
}

/// Lifts a `GammaTilde` quotient (even `d`) to its bipartite double cover:
/// `{X_a, X_b}` becomes `{X_a, X_b'}` and `{X_a', X_b}`, a loop at `X_a`
/// becomes the single bundle `{X_a, X_a'}`.
pub fn double_cover(g: &QuotientGraph) -> Result<QuotientGraph> {
    if !g.d.is_multiple_of(2) {
        return Err(Error::OddDegreeCover(g.d));
    }
    if g.variant != Variant::GammaTilde {
        return Err(Error::Invariant(
            "double cover expects a GammaTilde quotient".into(),
        ));
    }
    let mut vertices = Vec::with_capacity(2 * g.vertices.len());
    for v in &g.vertices {
        for label in [v.label, v.label.flip()] {
            vertices.push(Vertex {
                label,
                stabilizer_inherited: true,
                ..v.clone()
            });
        }
    }
    let mut edges = Vec::new();
    for e in &g.edges {
        if e.is_loop() {
            edges.push(Edge::new(e.a, e.a.flip(), e.mult));
        } else {
            edges.push(Edge::new(e.a, e.b.flip(), e.mult));
            edges.push(Edge::new(e.a.flip(), e.b, e.mult));
        }
    }
    edges.sort();
    Ok(QuotientGraph {
        variant: Variant::Gamma,
        vertices,
        edges,
        ..g.clone()
    })
}

/// Inverse of [`double_cover`]: forgets primes and folds lifted bundles.
pub fn collapse(g: &QuotientGraph) -> Result<QuotientGraph> {
    if !g.d.is_multiple_of(2) || g.variant != Variant::Gamma {
        return Err(Error::Invariant(
            "collapse expects an even-degree Gamma quotient".into(),
        ));
    }
    let vertices: Vec<Vertex> = g
        .vertices
        .iter()
        .filter(|v| !v.label.primed)
        .map(|v| Vertex {
            stabilizer_inherited: false,
            ..v.clone()
        })
        .collect();
    let mut bundles: BTreeMap<(u32, u32), Vec<u64>> = BTreeMap::new();
    for e in &g.edges {
        if e.a.primed == e.b.primed {
            return Err(Error::Invariant(format!(
                "edge {}-{} is not bipartite",
                e.a, e.b
            )));
        }
        let key = (e.a.n.min(e.b.n), e.a.n.max(e.b.n));
        bundles.entry(key).or_default().push(e.mult);
    }
    let mut edges = Vec::new();
    for ((a, b), mults) in bundles {
        let expected = if a == b { 1 } else { 2 };
        if mults.len() != expected || mults.iter().any(|&m| m != mults[0]) {
            return Err(Error::Invariant(format!(
                "bundles over X{a}-X{b} do not form a lift: {mults:?}"
            )));
        }
        edges.push(Edge::new(
            VertexLabel::plain(a),
            VertexLabel::plain(b),
            mults[0],
        ));
    }
    edges.sort();
    Ok(QuotientGraph {
        variant: Variant::GammaTilde,
        vertices,
        edges,
        ..g.clone()
    })
}
