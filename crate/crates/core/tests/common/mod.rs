//! Hand-transcribed diagram edge lists shared by the figure tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use btquot::quotient::{build_quotient, Edge, Variant, VertexLabel};

pub fn x(n: u32) -> VertexLabel {
    VertexLabel::plain(n)
}

pub fn xp(n: u32) -> VertexLabel {
    VertexLabel::primed(n)
}

pub fn edges(list: &[(VertexLabel, VertexLabel, u64)]) -> BTreeSet<Edge> {
    list.iter().map(|&(a, b, m)| Edge::new(a, b, m)).collect()
}

pub fn built(q: u64, d: u32, window: u32, variant: Variant) -> BTreeSet<Edge> {
    build_quotient(q, d, window, variant)
        .unwrap()
        .edges
        .into_iter()
        .collect()
}

pub fn figure_d1(_q: u64) -> BTreeSet<Edge> {
    edges(&[
        (x(0), x(1), 1),
        (x(1), x(2), 1),
        (x(2), x(3), 1),
        (x(3), x(4), 1),
    ])
}

pub fn figure_d2(_q: u64) -> BTreeSet<Edge> {
    edges(&[
        (x(4), xp(2), 1),
        (xp(2), x(0), 1),
        (x(0), xp(0), 1),
        (xp(0), x(2), 1),
        (x(2), xp(4), 1),
    ])
}

pub fn figure_d3(_q: u64) -> BTreeSet<Edge> {
    edges(&[
        (x(0), x(1), 1),
        (x(1), x(2), 1),
        (x(0), x(3), 1),
        (x(1), x(4), 1),
        (x(2), x(5), 1),
    ])
}

pub fn figure_d4(q: u64) -> BTreeSet<Edge> {
    edges(&[
        (xp(10), x(6), 1),
        (x(6), xp(2), 1),
        (xp(2), x(2), 1),
        (x(2), xp(6), 1),
        (xp(6), x(10), 1),
        (x(8), xp(4), 1),
        (xp(4), x(0), 1),
        (x(0), xp(0), q),
        (xp(0), x(4), 1),
        (x(4), xp(8), 1),
        (xp(2), x(0), 1),
        (x(2), xp(0), 1),
    ])
}

pub fn figure_d5(q: u64) -> BTreeSet<Edge> {
    edges(&[
        (x(0), x(1), q * q),
        (x(1), x(2), q + 1),
        (x(0), x(3), 1),
        (x(1), x(4), 1),
        (x(2), x(3), 1),
        (x(0), x(5), 1),
        (x(1), x(6), 1),
        (x(2), x(7), 1),
    ])
}

pub fn figure_d6(q: u64) -> BTreeSet<Edge> {
    edges(&[
        (x(0), xp(0), q * q * q - q * q + q),
        (x(0), xp(2), q * q),
        (xp(0), x(2), q * q),
        (x(0), xp(4), 1),
        (xp(0), x(4), 1),
        (x(2), xp(2), q + 1),
        (x(2), xp(4), 1),
        (xp(2), x(4), 1),
        (x(0), xp(6), 1),
        (xp(0), x(6), 1),
        (x(2), xp(8), 1),
        (xp(2), x(8), 1),
    ])
}

pub fn figure_d7(q: u64) -> BTreeSet<Edge> {
    edges(&[
        (x(2), x(3), q + 1),
        (x(3), x(4), 1),
        (x(4), x(1), q + 1),
        (x(1), x(0), q.pow(4)),
        (x(0), x(5), 1),
        (x(5), x(2), 1),
        (x(2), x(1), q.pow(3) + q.pow(2)),
        (x(3), x(0), q * q),
        (x(1), x(6), 1),
        (x(0), x(7), 1),
        (x(1), x(8), 1),
        (x(2), x(9), 1),
    ])
}

/// `(d, window, figure)` for every transcribed diagram; all use `Variant::Gamma`.
pub type Figure = fn(u64) -> BTreeSet<Edge>;

pub fn all_figures() -> Vec<(u32, u32, Figure)> {
    vec![
        (1, 4, figure_d1),
        (2, 4, figure_d2),
        (3, 5, figure_d3),
        (4, 10, figure_d4),
        (5, 7, figure_d5),
        (6, 8, figure_d6),
        (7, 9, figure_d7),
    ]
}
