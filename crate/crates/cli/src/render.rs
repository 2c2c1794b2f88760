//! Text renderings of quotient graphs and verification reports.

use std::fmt::Write;

use btquot::quotient::{Edge, QuotientGraph, Variant, VertexLabel};
use btquot::verify::VerificationReport;

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Gamma => "gamma",
        Variant::GammaTilde => "gamma-tilde",
    }
}

fn header(g: &QuotientGraph) -> String {
    format!(
        "q={} d={} variant={} window={}",
        g.q,
        g.d,
        variant_name(g.variant),
        g.window
    )
}

pub fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// One `--` record per bundle, labelled by its multiplicity.
pub fn dot(g: &QuotientGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph quotient {{").unwrap();
    writeln!(out, "  comment=\"{}\";", header(g)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in &g.vertices {
        let style = if v.frontier { ", style=dashed" } else { "" };
        writeln!(
            out,
            "  \"{}\" [tooltip=\"stabilizer order {}\"{style}];",
            v.label, v.stabilizer_order
        )
        .unwrap();
    }
    for e in &g.edges {
        writeln!(out, "  \"{}\" -- \"{}\" [label={}];", e.a, e.b, e.mult).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

fn is_chain(e: &Edge, d: u32) -> bool {
    e.b.n.abs_diff(e.a.n) == d
}

fn chain_next(g: &QuotientGraph, v: VertexLabel) -> Option<VertexLabel> {
    g.edges.iter().filter(|e| is_chain(e, g.d)).find_map(|e| {
        if e.a == v && e.b.n == v.n + g.d {
            Some(e.b)
        } else if e.b == v && e.a.n == v.n + g.d {
            Some(e.a)
        } else {
            None
        }
    })
}

fn bundle(e: &Edge) -> String {
    if e.mult == 1 {
        format!("{} - {}", e.a, e.b)
    } else {
        format!("{} - {}  x{}", e.a, e.b, e.mult)
    }
}

/// Chains `X_r - X_(r+d) - ...` one per row, then every other bundle with an
/// `xK` label when it carries `K > 1` edges.
pub fn ascii(g: &QuotientGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", header(g)).unwrap();
    writeln!(out, "chains:").unwrap();
    for start in g.vertices.iter().filter(|v| v.label.n < g.d) {
        let mut row = vec![start.label];
        while let Some(next) = chain_next(g, *row.last().unwrap()) {
            row.push(next);
        }
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let open = g.vertex(*row.last().unwrap()).is_some_and(|v| v.frontier);
        writeln!(
            out,
            "  {}{}",
            line.join(" - "),
            if open { " ..." } else { "" }
        )
        .unwrap();
    }
    let rungs: Vec<&Edge> = g.edges.iter().filter(|e| !is_chain(e, g.d)).collect();
    if !rungs.is_empty() {
        writeln!(out, "bundles:").unwrap();
        for e in rungs {
            writeln!(out, "  {}", bundle(e)).unwrap();
        }
    }
    writeln!(out, "stabilizers:").unwrap();
    for v in g.vertices.iter().filter(|v| !v.label.primed) {
        writeln!(out, "  |Stab {}| = {}", v.label, v.stabilizer_order).unwrap();
    }
    out
}

pub fn report_ascii(r: &VerificationReport) -> String {
    let mut out = String::new();
    let p = &r.params;
    writeln!(
        out,
        "q={} d={} f={} window={} seed={}",
        p.q, p.d, p.f, p.window, p.seed
    )
    .unwrap();
    writeln!(
        out,
        "{:>3} {:>3}  {:<13} {:>8} {:>8} {:>8} {:>8}  ok",
        "n", "m", "case", "|U|", "formula", "oracle", "closed"
    )
    .unwrap();
    for pr in &r.pairs {
        let formula = pr
            .upsilon_size_formula
            .map_or_else(|| "-".into(), |f| f.to_string());
        writeln!(
            out,
            "{:>3} {:>3}  {:<13} {:>8} {:>8} {:>8} {:>8}  {}",
            pr.n,
            pr.m,
            format!("{:?}", pr.case).to_lowercase(),
            pr.upsilon_size_observed,
            formula,
            pr.oracle_count,
            pr.closed_form,
            if pr.pass { "yes" } else { "NO" }
        )
        .unwrap();
    }
    for row in &r.regularity {
        writeln!(
            out,
            "regularity n={}: {} of {} {}",
            row.n,
            row.neighbor_sum,
            row.expected,
            if row.pass { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    if let Some(c) = &r.census {
        writeln!(
            out,
            "census: lengths {:?}, loops {} (formula {}) {}",
            c.lengths,
            c.loops_observed,
            c.loops_formula,
            if c.pass { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    if let Some(dl) = &r.distance_lemma {
        writeln!(
            out,
            "distance lemma: {} elements, {} products {}",
            dl.singles_checked,
            dl.products_checked,
            if dl.pass { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    if let Some(fi) = r.f_independence {
        writeln!(out, "independent of f: {fi}").unwrap();
    }
    if let Some(b) = &r.budget_failure {
        writeln!(
            out,
            "budget exceeded at ({}, {}): {} > {}",
            b.n, b.m, b.required, b.budget
        )
        .unwrap();
    }
    for note in &r.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    writeln!(out, "{}", if r.pass { "PASS" } else { "FAIL" }).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use btquot::quotient::build_quotient;

    #[test]
    fn dot_has_one_record_per_bundle() {
        let g = build_quotient(2, 5, 7, Variant::Gamma).unwrap();
        let text = dot(&g);
        let records: Vec<&str> = text.lines().filter(|l| l.contains(" -- ")).collect();
        assert_eq!(records.len(), g.edges.len());
        let total: u64 = records
            .iter()
            .map(|l| {
                l.split("label=")
                    .nth(1)
                    .unwrap()
                    .trim_end_matches("];")
                    .parse::<u64>()
                    .unwrap()
            })
            .sum();
        assert_eq!(total, g.total_edges());
    }

    #[test]
    fn ascii_ladder() {
        let g = build_quotient(2, 3, 8, Variant::Gamma).unwrap();
        let text = ascii(&g);
        assert!(text.contains("  X0 - X3 - X6 ...\n"));
        assert!(text.contains("  X1 - X4 - X7 ...\n"));
        assert!(text.contains("  X2 - X5 - X8 ...\n"));
        assert!(text.contains("  X0 - X1\n"));
        assert!(text.contains("  X1 - X2\n"));
        let g = build_quotient(3, 5, 7, Variant::Gamma).unwrap();
        assert!(ascii(&g).contains("X0 - X1  x9"));
    }

    #[test]
    fn ascii_even_degree_rows() {
        let g = build_quotient(2, 4, 10, Variant::Gamma).unwrap();
        let text = ascii(&g);
        assert!(text.contains("  X0 - X4' - X8 ...\n"));
        assert!(text.contains("  X2' - X6 - X10' ...\n"));
        assert!(text.contains("X0 - X0'  x2"));
    }
}
