use std::sync::Arc;

use super::field::FieldCtx;
use super::poly::{Degree, Poly};
use crate::error::{Error, Result};

/// A finite place of `F_q(t)`, given by a monic irreducible `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Place {
    field: Arc<FieldCtx>,
    f: Poly,
    degree: usize,
}

impl Place {
    pub fn new(field: Arc<FieldCtx>, f: Poly) -> Result<Self> {
        let degree = match f.degree() {
            Degree::Finite(d) if d >= 1 => d,
            other => return Err(Error::InvalidDegree(other.as_i64())),
        };
        if !f.is_monic() {
            return Err(Error::NotMonic(f.to_string_in(&field)));
        }
        if !f.is_irreducible(&field)? {
            return Err(Error::NotIrreducible(f.to_string_in(&field)));
        }
        Ok(Self { field, f, degree })
    }

    /// The place given by the first monic irreducible of degree `d`.
    pub fn first_of_degree(field: Arc<FieldCtx>, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let f = super::poly::enumerate_monic_irreducibles(&field, d)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Invariant(format!("no irreducible of degree {d}")))?;
        Self::new(field, f)
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Multiplicity of `f` in `a`.
    pub fn nu(&self, a: &Poly) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let k = &*self.field;
        let mut count = 0;
        let mut rest = a.clone();
        while let Some(quot) = rest.div_exact(&self.f, k) {
            rest = quot;
            count += 1;
        }
        Ok(count)
    }
}

/// `nu_inf(a/b) = deg b - deg a`.
pub fn nu_infty(a: &Poly, b: &Poly) -> Result<i64> {
    match (a.degree(), b.degree()) {
        (Degree::Finite(da), Degree::Finite(db)) => Ok(db as i64 - da as i64),
        _ => Err(Error::ZeroPolynomial),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cubic_place() -> Place {
        Place::first_of_degree(Arc::new(FieldCtx::new(2).unwrap()), 3).unwrap()
    }

    #[test]
    fn nu_p_examples() {
        let place = cubic_place();
        let k = place.field().clone();
        let f = place.f().clone();
        assert_eq!(place.nu(&f).unwrap(), 1);
        let t1 = Poly::parse("t+1", &k).unwrap();
        let a = f.mul(&f, &k).mul(&t1, &k);
        assert_eq!(place.nu(&a).unwrap(), 2);
        assert_eq!(place.nu(&Poly::one()).unwrap(), 0);
        assert_eq!(place.nu(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn nu_infty_examples() {
        let place = cubic_place();
        assert_eq!(nu_infty(&Poly::one(), &Poly::t()).unwrap(), 1);
        assert_eq!(nu_infty(&Poly::t(), &Poly::one()).unwrap(), -1);
        assert_eq!(nu_infty(place.f(), &Poly::one()).unwrap(), -3);
        assert!(nu_infty(&Poly::zero(), &Poly::one()).is_err());
        assert!(nu_infty(&Poly::one(), &Poly::zero()).is_err());
    }

    #[test]
    fn place_validation() {
        let k = Arc::new(FieldCtx::new(2).unwrap());
        assert!(Place::new(k.clone(), Poly::parse("t^2+1", &k).unwrap()).is_err());
        assert!(Place::new(k.clone(), Poly::one()).is_err());
        let k3 = Arc::new(FieldCtx::new(3).unwrap());
        assert!(matches!(
            Place::new(k3.clone(), Poly::parse("2*t^2+2", &k3).unwrap()),
            Err(Error::NotMonic(_))
        ));
    }

    proptest! {
        #[test]
        fn valuations_add(a in prop::collection::vec(0u32..2, 1..6), b in prop::collection::vec(0u32..2, 1..6),
                          ea in 0u32..3, eb in 0u32..3) {
            let place = cubic_place();
            let k = place.field().clone();
            let a = Poly::from_coeffs(a.into_iter().map(|x| k.elem(x).unwrap()).collect());
            let b = Poly::from_coeffs(b.into_iter().map(|x| k.elem(x).unwrap()).collect());
            prop_assume!(!a.is_zero() && !b.is_zero());
            let a = a.mul(&place.f().pow(ea, &k), &k);
            let b = b.mul(&place.f().pow(eb, &k), &k);
            let ab = a.mul(&b, &k);
            prop_assert_eq!(place.nu(&ab).unwrap(), place.nu(&a).unwrap() + place.nu(&b).unwrap());
            // nu_inf of (a/b)(b/a) adds up to zero, and (a/1)(1/b) = a/b
            prop_assert_eq!(nu_infty(&a, &b).unwrap() + nu_infty(&b, &a).unwrap(), 0);
            prop_assert_eq!(nu_infty(&a, &Poly::one()).unwrap() + nu_infty(&Poly::one(), &b).unwrap(),
                            nu_infty(&a, &b).unwrap());
        }
    }
}
