//! Phase-space vectors and the forms `β`, `σ` and `Σ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{FieldElement, Prime};
use crate::laurent::LaurentPoly;

/// A point `ξ = (ξ₊, ξ₋)` of phase space: two finitely supported lattice
/// functions, stored as Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseVector {
    plus: LaurentPoly,
    minus: LaurentPoly,
}

impl PhaseVector {
    pub fn new(plus: LaurentPoly, minus: LaurentPoly) -> Result<Self> {
        plus.check(&minus)?;
        Ok(PhaseVector { plus, minus })
    }

    pub fn zero(modulus: Prime, dim: usize) -> Self {
        PhaseVector {
            plus: LaurentPoly::zero(modulus, dim),
            minus: LaurentPoly::zero(modulus, dim),
        }
    }

    /// Delta function at `x` in the `+` slot.
    pub fn e_plus(x: &[i64], modulus: Prime) -> Self {
        PhaseVector {
            plus: LaurentPoly::monomial(x, FieldElement::one(modulus)),
            minus: LaurentPoly::zero(modulus, x.len()),
        }
    }

    /// Delta function at `x` in the `-` slot.
    pub fn e_minus(x: &[i64], modulus: Prime) -> Self {
        PhaseVector {
            plus: LaurentPoly::zero(modulus, x.len()),
            minus: LaurentPoly::monomial(x, FieldElement::one(modulus)),
        }
    }

    pub fn plus(&self) -> &LaurentPoly {
        &self.plus
    }

    pub fn minus(&self) -> &LaurentPoly {
        &self.minus
    }

    pub fn modulus(&self) -> Prime {
        self.plus.modulus()
    }

    pub fn dim(&self) -> usize {
        self.plus.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub(crate) fn check(&self, other: &Self) -> Result<()> {
        self.plus.check(&other.plus)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(PhaseVector {
            plus: self.plus.add(&other.plus)?,
            minus: self.minus.add(&other.minus)?,
        })
    }

    /// Module action of a ring element: `(f ξ₊, f ξ₋)`.
    pub fn scale_poly(&self, f: &LaurentPoly) -> Result<Self> {
        Ok(PhaseVector {
            plus: f.mul(&self.plus)?,
            minus: f.mul(&self.minus)?,
        })
    }

    pub fn scale(&self, c: FieldElement) -> Result<Self> {
        Ok(PhaseVector {
            plus: self.plus.scale(c)?,
            minus: self.minus.scale(c)?,
        })
    }

    /// Union of the supports of both components, ascending.
    pub fn support(&self) -> Vec<Vec<i64>> {
        let mut sites: Vec<Vec<i64>> = self.plus.support().chain(self.minus.support()).cloned().collect();
        sites.sort();
        sites.dedup();
        sites
    }
}

impl fmt::Display for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(\"{}\", \"{}\")", self.plus, self.minus)
    }
}

/// `β(ξ, η) = Σ_x ξ₊(x) η₋(x)`, summed over the common support only.
pub fn beta(xi: &PhaseVector, eta: &PhaseVector) -> Result<FieldElement> {
    xi.check(eta)?;
    let p = xi.modulus();
    let (small, large) = if xi.plus.len() <= eta.minus.len() {
        (xi.plus.raw_terms(), eta.minus.raw_terms())
    } else {
        (eta.minus.raw_terms(), xi.plus.raw_terms())
    };
    let mut acc = 0u64;
    for (x, &a) in small {
        if let Some(&b) = large.get(x) {
            acc = p.add(acc, p.mul(a, b));
        }
    }
    Ok(FieldElement::from_reduced(acc, p))
}

/// The symplectic form `σ(ξ, η) = β(ξ, η) − β(η, ξ)`.
pub fn sigma(xi: &PhaseVector, eta: &PhaseVector) -> Result<FieldElement> {
    beta(xi, eta)?.sub(&beta(eta, xi)?)
}

/// The polynomial-valued form `Σ(ξ, η) = reflect(ξ₊)·η₋ − reflect(ξ₋)·η₊`.
pub fn form_sigma_poly(xi: &PhaseVector, eta: &PhaseVector) -> Result<LaurentPoly> {
    xi.check(eta)?;
    xi.plus
        .reflect()
        .mul(&eta.minus)?
        .sub(&xi.minus.reflect().mul(&eta.plus)?)
}

/// Lattice translation by `x`: both components multiplied by `u^x`.
pub fn translate(xi: &PhaseVector, x: &[i64]) -> Result<PhaseVector> {
    if x.len() != xi.dim() {
        return Err(Error::DimensionMismatch {
            left: xi.dim(),
            right: x.len(),
        });
    }
    Ok(PhaseVector {
        plus: xi.plus.shift(x)?,
        minus: xi.minus.shift(x)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn pv(n: u64, plus: &[(i64, i64)], minus: &[(i64, i64)]) -> PhaseVector {
        PhaseVector::new(
            LaurentPoly::from_1d(p(n), plus),
            LaurentPoly::from_1d(p(n), minus),
        )
        .unwrap()
    }

    #[test]
    fn beta_examples() {
        let xi = pv(3, &[(0, 1)], &[(0, 1)]);
        assert_eq!(beta(&xi, &xi).unwrap().value(), 1);
        let a = pv(3, &[(1, 1)], &[]);
        let b = pv(3, &[], &[(2, 1)]);
        assert_eq!(beta(&a, &b).unwrap().value(), 0);
        let c = pv(3, &[], &[(0, 2), (1, 1)]);
        let any = pv(3, &[(0, 1), (4, 2)], &[(0, 2), (1, 1)]);
        assert_eq!(beta(&c, &any).unwrap().value(), 0);
    }

    #[test]
    fn sigma_examples() {
        let z = PhaseVector::e_plus(&[0], p(2));
        let x = PhaseVector::e_minus(&[0], p(2));
        assert_eq!(sigma(&z, &x).unwrap().value(), 1);
        let xi = pv(5, &[(0, 3), (2, 1)], &[(0, 4), (-1, 2)]);
        assert_eq!(sigma(&xi, &xi).unwrap().value(), 0);
        let a = pv(5, &[(0, 1)], &[(0, 1)]);
        let b = pv(5, &[(3, 2)], &[(3, 1)]);
        assert_eq!(sigma(&a, &b).unwrap().value(), 0);
    }

    #[test]
    fn sigma_poly_examples() {
        let e1 = pv(3, &[(0, 1)], &[]);
        let e2 = pv(3, &[], &[(0, 1)]);
        assert!(form_sigma_poly(&e1, &e2).unwrap().is_one());
        let uu = pv(3, &[(1, 1)], &[(1, 1)]);
        assert!(form_sigma_poly(&uu, &uu).unwrap().is_zero());
        let u0 = pv(3, &[(1, 1)], &[]);
        assert_eq!(
            form_sigma_poly(&u0, &e2).unwrap(),
            LaurentPoly::from_1d(p(3), &[(-1, 1)])
        );
    }

    #[test]
    fn translate_examples() {
        let d0 = PhaseVector::e_plus(&[0], p(3));
        assert_eq!(translate(&d0, &[3]).unwrap(), PhaseVector::e_plus(&[3], p(3)));
        let xi = pv(3, &[(0, 1), (2, 2)], &[(-1, 1)]);
        assert_eq!(translate(&xi, &[0]).unwrap(), xi);
        assert_eq!(
            translate(&translate(&xi, &[5]).unwrap(), &[-5]).unwrap(),
            xi
        );
        assert!(translate(&xi, &[1, 1]).is_err());
    }

    #[test]
    fn mismatch_is_rejected() {
        let a = PhaseVector::e_plus(&[0], p(2));
        let b = PhaseVector::e_plus(&[0], p(3));
        assert!(beta(&a, &b).is_err());
        assert!(PhaseVector::new(LaurentPoly::zero(p(2), 1), LaurentPoly::zero(p(2), 2)).is_err());
    }
}
