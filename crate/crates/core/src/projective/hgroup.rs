use crate::algebra::{FieldCtx, Poly, PolySpace};

use super::ProjMat;

/// Order of `H_n`: `q(q-1)(q+1)` for `n = 0`, `(q-1) q^(n+1)` otherwise.
pub fn h_group_order(q: u64, n: u32) -> Option<u64> {
    if n == 0 {
        q.checked_mul(q - 1)?.checked_mul(q + 1)
    } else {
        (q - 1).checked_mul(q.checked_pow(n + 1)?)
    }
}

/// Canonical elements of `H_n`.
///
/// `H_0` is all of `PGL_2(F_q)`; for `n >= 1` it is the upper triangular
/// group `[[a, b], [0, d]]` with `a, d` nonzero constants and `deg b <= n`.
pub fn h_group(k: &FieldCtx, n: u32) -> Vec<ProjMat> {
    if n == 0 {
        return pgl2(k);
    }
    let space = PolySpace::new(k, n as i64);
    let mut out = Vec::with_capacity((k.order() as usize - 1) * space.len() as usize);
    for b in space.iter() {
        for d in k.units() {
            out.push(ProjMat::from_canonical([
                Poly::one(),
                b.clone(),
                Poly::zero(),
                Poly::constant(d),
            ]));
        }
    }
    out
}

/// `PGL_2(F_q)` as canonical constant matrices.
pub fn pgl2(k: &FieldCtx) -> Vec<ProjMat> {
    let mut out = Vec::new();
    for a in k.elements() {
        for b in k.elements() {
            for c in k.elements() {
                for d in k.elements() {
                    let first = [a, b, c, d].into_iter().find(|x| !x.is_zero());
                    if first.is_none_or(|x| !x.is_one()) {
                        continue;
                    }
                    if k.sub(k.mul(a, d), k.mul(b, c)).is_zero() {
                        continue;
                    }
                    out.push(ProjMat::from_canonical([a, b, c, d].map(Poly::constant)));
                }
            }
        }
    }
    out
}
