//! Exhaustive enumeration of `Upsilon(n, m)` and exact coset counting.
//!
//! `Upsilon(n, m)` is the set of canonical matrices with entry degrees
//! bounded by [`UpsilonBounds`] and determinant `lambda * f`, `lambda` a
//! nonzero constant. The number of `H_n \ Upsilon(n, m) / H_m` double cosets
//! is the number of quotient edges between `X_n` and `X_m`.

mod partition;

use std::collections::HashMap;

use crate::algebra::{FieldCtx, Place, Poly, PolySpace};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::projective::{h_group, is_unit_multiple_of_f, ProjMat, UpsilonBounds};

pub use partition::{CosetPartition, UnionFind};

/// Default cap on the naive candidate-tuple count of one enumeration.
pub const DEFAULT_BUDGET: u128 = 1 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u128,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct UpsilonSet {
    place: Place,
    n: u32,
    m: u32,
    elements: Vec<ProjMat>,
    index: HashMap<ProjMat, usize>,
}

impl UpsilonSet {
    pub fn place(&self) -> &Place {
        &self.place
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ProjMat] {
        &self.elements
    }

    pub fn index_of(&self, mat: &ProjMat) -> Option<usize> {
        self.index.get(mat).copied()
    }

    /// `(d - n - m) / 2` when `n + m <= d` with matching parity.
    pub fn l(&self) -> Option<u32> {
        half_gap(self.place.degree() as u32, self.n, self.m)
    }
}

pub(crate) fn half_gap(d: u32, n: u32, m: u32) -> Option<u32> {
    (n + m <= d && (d - n - m).is_multiple_of(2)).then(|| (d - n - m) / 2)
}

/// Emptiness predicted from `(d, n, m)` alone: parity mismatch, or
/// `n + m > d` off the chain `|m - n| = d`.
pub fn predicted_empty(d: u32, n: u32, m: u32) -> bool {
    !(d + n + m).is_multiple_of(2) || (n + m > d && n.abs_diff(m) != d)
}

/// Size of the naive search space `prod q^(bound + 1)` over the four entries.
pub fn candidate_tuples(q: u64, d: u32, n: u32, m: u32) -> u128 {
    let Some(bounds) = UpsilonBounds::new(d, n, m) else {
        return 0;
    };
    let exp: i64 = bounds.as_array().iter().map(|&b| (b + 1).max(0)).sum();
    (q as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

pub fn enumerate_upsilon(place: &Place, n: u32, m: u32) -> Result<UpsilonSet> {
    enumerate_upsilon_with(place, n, m, SearchOptions::default())
}

/// Enumerates `Upsilon(n, m)`.
///
/// Iterates `(alpha, gamma)` pairs with `alpha` zero or monic (the canonical
/// scaling) and `gcd(alpha, gamma)` in `{1, f}`, then for each `delta`
/// solves `alpha delta - beta gamma = lambda f` for `beta` by exact division
/// (or, when `gamma = 0`, checks `alpha delta` and lets `beta` range freely).
pub fn enumerate_upsilon_with(
    place: &Place,
    n: u32,
    m: u32,
    opts: SearchOptions,
) -> Result<UpsilonSet> {
    let k = place.field();
    let d = place.degree() as u32;
    let mut set = UpsilonSet {
        place: place.clone(),
        n,
        m,
        elements: Vec::new(),
        index: HashMap::new(),
    };
    let Some(bounds) = UpsilonBounds::new(d, n, m) else {
        return Ok(set);
    };
    let required = candidate_tuples(k.order() as u64, d, n, m);
    if required > opts.budget {
        return Err(Error::BudgetExceeded {
            n,
            m,
            required,
            budget: opts.budget,
        });
    }

    let alphas: Vec<Poly> = PolySpace::new(k, bounds.alpha)
        .iter()
        .filter(|a| a.is_zero() || a.is_monic())
        .collect();
    let gammas: Vec<Poly> = PolySpace::new(k, bounds.gamma).iter().collect();
    let pairs: Vec<(usize, usize)> = (0..alphas.len())
        .flat_map(|i| (0..gammas.len()).map(move |j| (i, j)))
        .collect();

    let chunks = opts.exec.map(&pairs, |&(i, j)| {
        solve_for_pair(place, &bounds, &alphas[i], &gammas[j])
    });

    for raw in chunks.into_iter().flatten() {
        debug_assert!(ProjMat::is_canonical(&raw, k));
        let mat = ProjMat::from_canonical(raw);
        let next = set.elements.len();
        if set.index.insert(mat.clone(), next).is_some() {
            return Err(Error::Invariant(format!(
                "duplicate element {} in Upsilon({n},{m})",
                mat.to_string_in(k)
            )));
        }
        set.elements.push(mat);
    }
    Ok(set)
}

fn solve_for_pair(
    place: &Place,
    bounds: &UpsilonBounds,
    alpha: &Poly,
    gamma: &Poly,
) -> Vec<[Poly; 4]> {
    let k: &FieldCtx = place.field();
    let f = place.f();
    let mut out = Vec::new();
    if alpha.is_zero() && gamma.is_zero() {
        return out;
    }
    let g = alpha.gcd(gamma, k);
    if !g.is_one() && &g != f {
        return out;
    }
    let deltas = PolySpace::new(k, bounds.delta);
    let betas = PolySpace::new(k, bounds.beta);
    // canonical scaling: alpha monic, or alpha = 0 and beta monic
    let beta_ok = |b: &Poly| !alpha.is_zero() || b.is_monic();
    if gamma.is_zero() {
        for delta in deltas.iter() {
            if !is_unit_multiple_of_f(&alpha.mul(&delta, k), place) {
                continue;
            }
            for beta in betas.iter().filter(|b| beta_ok(b)) {
                out.push([alpha.clone(), beta, Poly::zero(), delta.clone()]);
            }
        }
    } else {
        for delta in deltas.iter() {
            let ad = alpha.mul(&delta, k);
            for lambda in k.units() {
                let rhs = ad.sub(&f.scale(lambda, k), k);
                let Some(beta) = rhs.div_exact(gamma, k) else {
                    continue;
                };
                if beta.degree().at_most(bounds.beta) && beta_ok(&beta) {
                    out.push([alpha.clone(), beta, gamma.clone(), delta.clone()]);
                }
            }
        }
    }
    out
}

/// Predicted `|Upsilon(n, m)|` for `n + m < d`:
/// `q^(n+m) (q^(2l+1) + q^(2l)) (q-1)^2` with `l = (d-n-m)/2`.
pub fn upsilon_size_formula(q: u64, d: u32, n: u32, m: u32) -> Result<u64> {
    if n + m >= d || !(d + n + m).is_multiple_of(2) {
        return Err(Error::OutOfCase(format!(
            "size formula needs n + m < d with matching parity, got d={d} n={n} m={m}"
        )));
    }
    let l = (d - n - m) / 2;
    let ov = || Error::Overflow("upsilon size formula");
    let qp = |e: u32| q.checked_pow(e).ok_or_else(ov);
    let inner = qp(2 * l + 1)?.checked_add(qp(2 * l)?).ok_or_else(ov)?;
    qp(n + m)?
        .checked_mul(inner)
        .and_then(|x| x.checked_mul((q - 1) * (q - 1)))
        .ok_or_else(ov)
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// Unions every element with its whole orbit under `group` acting on `side`.
/// Each orbit is generated once from its first unvisited member.
fn close_under(
    u: &UpsilonSet,
    group: &[ProjMat],
    side: Side,
    uf: &mut UnionFind,
    exec: Exec,
) -> Result<()> {
    let k = u.place.field();
    let mut visited = vec![false; u.len()];
    for i in 0..u.len() {
        if visited[i] {
            continue;
        }
        visited[i] = true;
        let e = &u.elements[i];
        let images: Vec<Option<usize>> = if group.len() >= 64 {
            exec.map(group, |g| image_index(u, e, g, side, k))
        } else {
            group
                .iter()
                .map(|g| image_index(u, e, g, side, k))
                .collect()
        };
        for (g, j) in group.iter().zip(images) {
            let j = j.ok_or_else(|| {
                Error::Invariant(format!(
                    "Upsilon({},{}) not stable under {}",
                    u.n,
                    u.m,
                    g.to_string_in(k)
                ))
            })?;
            uf.union(i, j);
            visited[j] = true;
        }
    }
    Ok(())
}

fn image_index(
    u: &UpsilonSet,
    e: &ProjMat,
    g: &ProjMat,
    side: Side,
    k: &FieldCtx,
) -> Option<usize> {
    let image = match side {
        Side::Left => g.mul(e, k),
        Side::Right => e.mul(g, k),
    };
    u.index_of(&image)
}

/// Partition of `Upsilon(n, m)` into left cosets `e H_m`.
pub fn left_coset_partition(u: &UpsilonSet, h_m: &[ProjMat], exec: Exec) -> Result<CosetPartition> {
    let mut uf = UnionFind::new(u.len());
    close_under(u, h_m, Side::Right, &mut uf, exec)?;
    Ok(uf.resolve())
}

/// Partition of `Upsilon(n, m)` into double cosets `H_n e H_m`.
pub fn double_coset_partition(
    u: &UpsilonSet,
    h_n: &[ProjMat],
    h_m: &[ProjMat],
    exec: Exec,
) -> Result<CosetPartition> {
    let mut uf = UnionFind::new(u.len());
    close_under(u, h_n, Side::Left, &mut uf, exec)?;
    close_under(u, h_m, Side::Right, &mut uf, exec)?;
    Ok(uf.resolve())
}

pub fn left_coset_count(u: &UpsilonSet) -> Result<usize> {
    if u.is_empty() {
        return Ok(0);
    }
    let h_m = h_group(u.place.field(), u.m);
    Ok(left_coset_partition(u, &h_m, Exec::default())?.class_count())
}

pub fn double_coset_count(u: &UpsilonSet) -> Result<usize> {
    if u.is_empty() {
        return Ok(0);
    }
    let k = u.place.field();
    let h_n = h_group(k, u.n);
    let h_m = h_group(k, u.m);
    Ok(double_coset_partition(u, &h_n, &h_m, Exec::default())?.class_count())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::FieldCtx;
    use crate::projective::upsilon_member;

    fn place(q: u64, d: usize) -> Place {
        Place::first_of_degree(Arc::new(FieldCtx::new(q).unwrap()), d).unwrap()
    }

    /// Independent oracle: scan every 4-tuple in the bounded spaces, keep
    /// those with determinant in `k* f`, and count canonical classes.
    fn brute_force_size(pl: &Place, n: u32, m: u32) -> usize {
        let k = pl.field();
        let Some(b) = UpsilonBounds::new(pl.degree() as u32, n, m) else {
            return 0;
        };
        let spaces = b
            .as_array()
            .map(|x| PolySpace::new(k, x).iter().collect::<Vec<_>>());
        let mut classes = std::collections::HashSet::new();
        for a in &spaces[0] {
            for bb in &spaces[1] {
                for c in &spaces[2] {
                    for d in &spaces[3] {
                        let det = a.mul(d, k).sub(&bb.mul(c, k), k);
                        if det.is_zero() || det.degree() != pl.f().degree() {
                            continue;
                        }
                        if det != pl.f().scale(det.lead(), k) {
                            continue;
                        }
                        let raw = [a.clone(), bb.clone(), c.clone(), d.clone()];
                        classes.insert(ProjMat::canonicalize(raw, k).unwrap());
                    }
                }
            }
        }
        classes.len()
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (q, d) in [(2u64, 1usize), (2, 2), (2, 3), (3, 2), (2, 4), (4, 1)] {
            let pl = place(q, d);
            for n in 0..=3u32 {
                for m in 0..=(d as u32 + 3) {
                    if candidate_tuples(q, d as u32, n, m) > 1 << 16 {
                        continue;
                    }
                    let u = enumerate_upsilon(&pl, n, m).unwrap();
                    assert_eq!(
                        u.len(),
                        brute_force_size(&pl, n, m),
                        "q={q} d={d} n={n} m={m}"
                    );
                    assert_eq!(
                        u.is_empty(),
                        predicted_empty(d as u32, n, m),
                        "q={q} d={d} n={n} m={m}"
                    );
                    for e in u.elements() {
                        assert!(upsilon_member(&pl, n, m, e));
                        assert_eq!(e.bt_distance(&pl), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let pl = place(2, 3);
        // frozen from brute_force_size
        assert_eq!(enumerate_upsilon(&pl, 0, 1).unwrap().len(), 24);
        assert!(enumerate_upsilon(&pl, 0, 2).unwrap().is_empty());
        assert!(enumerate_upsilon(&place(2, 2), 0, 4).unwrap().is_empty());
        let u = enumerate_upsilon(&pl, 0, 1).unwrap();
        assert_eq!(u.l(), Some(1));
        assert_eq!(u.index_of(&u.elements()[7]), Some(7));
    }

    #[test]
    fn budget_guard() {
        let pl = place(2, 3);
        let opts = SearchOptions {
            budget: 100,
            exec: Exec::Sequential,
        };
        assert_eq!(candidate_tuples(2, 3, 0, 1), 1 << 10);
        assert_eq!(
            enumerate_upsilon_with(&pl, 0, 1, opts).unwrap_err(),
            Error::BudgetExceeded {
                n: 0,
                m: 1,
                required: 1024,
                budget: 100
            }
        );
        // parity-empty sets never hit the budget
        assert!(enumerate_upsilon_with(&pl, 0, 2, opts).unwrap().is_empty());
    }

    #[test]
    fn size_formula_against_oracle() {
        // q = 3 separates the candidate (q-1)-exponents: 144 vs 72
        let pl = place(3, 2);
        assert_eq!(brute_force_size(&pl, 0, 0), 144);
        assert_eq!(enumerate_upsilon(&pl, 0, 0).unwrap().len(), 144);
        assert_eq!(upsilon_size_formula(3, 2, 0, 0).unwrap(), 144);
        assert_eq!(upsilon_size_formula(2, 3, 0, 1).unwrap(), 24);
        assert_eq!(upsilon_size_formula(2, 5, 1, 2).unwrap(), 96);
        assert_eq!(enumerate_upsilon(&place(2, 5), 1, 2).unwrap().len(), 96);
        assert!(upsilon_size_formula(2, 3, 1, 2).is_err());
        assert!(upsilon_size_formula(2, 3, 0, 2).is_err());
    }

    #[test]
    fn coset_count_examples() {
        let u = enumerate_upsilon(&place(2, 3), 0, 1).unwrap();
        assert_eq!(left_coset_count(&u).unwrap(), 6);
        let u = enumerate_upsilon(&place(2, 1), 0, 1).unwrap();
        assert_eq!(left_coset_count(&u).unwrap(), 3);
        let empty = enumerate_upsilon(&place(2, 3), 0, 2).unwrap();
        assert_eq!(left_coset_count(&empty).unwrap(), 0);
        assert_eq!(double_coset_count(&empty).unwrap(), 0);

        assert_eq!(
            double_coset_count(&enumerate_upsilon(&place(2, 3), 1, 2).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            double_coset_count(&enumerate_upsilon(&place(2, 5), 0, 1).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            double_coset_count(&enumerate_upsilon(&place(2, 4), 0, 0).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let pl = place(3, 3);
        let s = enumerate_upsilon_with(
            &pl,
            1,
            2,
            SearchOptions {
                exec: Exec::Sequential,
                ..Default::default()
            },
        )
        .unwrap();
        let p = enumerate_upsilon_with(
            &pl,
            1,
            2,
            SearchOptions {
                exec: Exec::Parallel,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(s.elements(), p.elements());
    }
}
