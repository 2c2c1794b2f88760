//! Exact arithmetic in `F_q` and `F_q[t]`, and the valuations `nu_p`, `nu_inf`.

mod field;
mod place;
mod poly;
mod text;

pub use field::{prime_power, FieldCtx, FieldElem, MAX_FIELD_ORDER};
pub use place::{nu_infty, Place};
pub use poly::{enumerate_monic_irreducibles, enumerate_polys, Degree, Poly, PolySpace};
pub use text::parse_matrix;

/// Field of order `q^d` built over `k`; see [`FieldCtx::extension`].
pub fn extension_field(k: &FieldCtx, d: u32) -> crate::Result<FieldCtx> {
    k.extension(d)
}
