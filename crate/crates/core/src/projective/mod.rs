//! `PGL_2` over `F_q[t]`: canonical matrices, the stabilizer groups `H_n`,
//! membership in `Upsilon(n, m)`, and the Möbius action of `PGL_2(F_q)`.

mod hgroup;
mod mat;
mod membership;
mod moebius;

pub use hgroup::{h_group, h_group_order, pgl2};
pub use mat::ProjMat;
pub use membership::{maps_ym_to_yn, upsilon_member, RatFn, UpsilonBounds};
pub use moebius::{moebius_orbit_census, OrbitCensus, ProjPoint};

pub(crate) use membership::is_unit_multiple_of_f;
