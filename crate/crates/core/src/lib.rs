//! Quotient graphs of `PGL_2(F_q[t])`-type groups acting on the Bruhat–Tits
//! tree at a degree-`d` place, with a brute-force double-coset oracle that
//! checks every closed form.

pub mod algebra;
mod error;
mod exec;
pub mod projective;
pub mod quotient;
pub mod upsilon;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
