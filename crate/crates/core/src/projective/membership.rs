use crate::algebra::{nu_infty, FieldCtx, Place, Poly};
use crate::error::{Error, Result};

use super::ProjMat;

/// Degree bounds on `(alpha, beta, gamma, delta)` for members of `Upsilon(n, m)`.
///
/// A negative bound admits only the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpsilonBounds {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
}

impl UpsilonBounds {
    /// `None` when `d` and `n + m` differ in parity (the set is empty).
    pub fn new(d: u32, n: u32, m: u32) -> Option<Self> {
        let (d, n, m) = (d as i64, n as i64, m as i64);
        if (d + n + m) % 2 != 0 {
            return None;
        }
        Some(Self {
            alpha: (d + n - m).div_euclid(2),
            beta: (d + n + m).div_euclid(2),
            gamma: (d - n - m).div_euclid(2),
            delta: (d - n + m).div_euclid(2),
        })
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }
}

/// Membership in `Upsilon(n, m)`: the degree bounds hold and
/// `alpha delta - beta gamma` is a nonzero constant multiple of `f`.
pub fn upsilon_member(place: &Place, n: u32, m: u32, mat: &ProjMat) -> bool {
    let Some(bounds) = UpsilonBounds::new(place.degree() as u32, n, m) else {
        return false;
    };
    let within = mat
        .entries()
        .iter()
        .zip(bounds.as_array())
        .all(|(e, b)| e.degree().at_most(b));
    within && is_unit_multiple_of_f(&mat.det(place.field()), place)
}

pub(crate) fn is_unit_multiple_of_f(det: &Poly, place: &Place) -> bool {
    det.degree() == place.f().degree() && det == &place.f().scale(det.lead(), place.field())
}

/// A rational function `num / den` with `den != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    pub fn poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    /// `nu_inf`, with `None` standing for `+inf` at zero.
    pub fn nu_infty(&self) -> Option<i64> {
        if self.num.is_zero() {
            None
        } else {
            Some(nu_infty(&self.num, &self.den).expect("both nonzero"))
        }
    }

    fn mul(&self, other: &Self, k: &FieldCtx) -> Self {
        Self {
            num: self.num.mul(&other.num, k),
            den: self.den.mul(&other.den, k),
        }
    }

    fn sub(&self, other: &Self, k: &FieldCtx) -> Self {
        Self {
            num: self
                .num
                .mul(&other.den, k)
                .sub(&other.num.mul(&self.den, k), k),
            den: self.den.mul(&other.den, k),
        }
    }
}

/// Whether `[[alpha, beta], [gamma, delta]]` over `F_q(t)` maps `y_m` to `y_n`
/// in the tree at infinity:
/// `nu(alpha) >= m-n`, `nu(beta) >= -n`, `nu(gamma) >= m`, `nu(delta) >= 0`,
/// and `nu(det) = m-n`.
pub fn maps_ym_to_yn(n: u32, m: u32, entries: &[RatFn; 4], k: &FieldCtx) -> bool {
    let (n, m) = (n as i64, m as i64);
    let at_least = |r: &RatFn, bound: i64| r.nu_infty().is_none_or(|v| v >= bound);
    let [a, b, c, d] = entries;
    if !(at_least(a, m - n) && at_least(b, -n) && at_least(c, m) && at_least(d, 0)) {
        return false;
    }
    let det = a.mul(d, k).sub(&b.mul(c, k), k);
    det.nu_infty() == Some(m - n)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn place(q: u64, d: usize) -> Place {
        Place::first_of_degree(Arc::new(FieldCtx::new(q).unwrap()), d).unwrap()
    }

    #[test]
    fn member_examples() {
        for d in 1..=5usize {
            let pl = place(2, d);
            let k = pl.field().clone();
            let f = pl.f().clone();
            let diag =
                ProjMat::canonicalize([Poly::one(), Poly::zero(), Poly::zero(), f.clone()], &k)
                    .unwrap();
            let swap =
                ProjMat::canonicalize([Poly::zero(), f.neg(&k), Poly::one(), Poly::zero()], &k)
                    .unwrap();
            for n in 0..4u32 {
                assert!(upsilon_member(&pl, n, n + d as u32, &diag), "d={d} n={n}");
                if n as usize <= d {
                    assert!(upsilon_member(&pl, n, d as u32 - n, &swap), "d={d} n={n}");
                }
                // parity mismatch never admits anything
                assert!(!upsilon_member(&pl, n, n + d as u32 + 1, &diag));
                // det = 1 is not a multiple of f
                for m in 0..6u32 {
                    assert!(!upsilon_member(&pl, n, m, &ProjMat::identity()));
                }
            }
        }
    }

    #[test]
    fn half_integer_bounds_short_circuit() {
        assert_eq!(UpsilonBounds::new(3, 0, 2), None);
        assert_eq!(
            UpsilonBounds::new(2, 0, 4),
            Some(UpsilonBounds {
                alpha: -1,
                beta: 3,
                gamma: -1,
                delta: 3
            })
        );
    }

    #[test]
    fn maps_examples() {
        let k = FieldCtx::new(3).unwrap();
        let one = || RatFn::poly(Poly::one());
        let zero = || RatFn::poly(Poly::zero());
        for (n, m) in [(3u32, 1u32), (2, 2), (5, 0)] {
            let diag = [RatFn::poly(Poly::t().pow(n - m, &k)), zero(), zero(), one()];
            assert!(maps_ym_to_yn(n, m, &diag, &k));
        }
        // n < m needs t^(n-m) as a fraction
        let diag = [
            RatFn::new(Poly::one(), Poly::t().pow(2, &k)).unwrap(),
            zero(),
            zero(),
            one(),
        ];
        assert!(maps_ym_to_yn(1, 3, &diag, &k));
        assert!(maps_ym_to_yn(4, 4, &[one(), zero(), zero(), one()], &k));
        assert!(!maps_ym_to_yn(
            0,
            0,
            &[RatFn::poly(Poly::t()), zero(), zero(), one()],
            &k
        ));
        assert!(RatFn::new(Poly::one(), Poly::zero()).is_err());
    }
}
