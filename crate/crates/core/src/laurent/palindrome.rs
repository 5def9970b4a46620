//! The palindrome subring: Laurent polynomials fixed by `u -> u^-1`.
//!
//! For one variable it is spanned by the symmetric basis `b_0 = 1`,
//! `b_n = u^n + u^-n`, and admits a Euclidean division by degree.

use std::fmt;

use super::{Degree, LaurentPoly};
use crate::error::{Error, Result};
use crate::ffield::{FieldElement, Prime};

/// A reflection-invariant Laurent polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Palindrome(LaurentPoly);

impl Palindrome {
    pub fn new(f: LaurentPoly) -> Result<Self> {
        if f.is_palindrome() {
            Ok(Palindrome(f))
        } else {
            Err(Error::NotPalindrome(f.to_string()))
        }
    }

    pub fn zero(modulus: Prime, dim: usize) -> Self {
        Palindrome(LaurentPoly::zero(modulus, dim))
    }

    pub fn one(modulus: Prime, dim: usize) -> Self {
        Palindrome(LaurentPoly::one(modulus, dim))
    }

    pub fn constant(c: FieldElement, dim: usize) -> Self {
        Palindrome(LaurentPoly::constant(c, dim))
    }

    pub fn as_poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> Result<Degree> {
        self.0.degree()
    }

    /// Units of the palindrome subring are the nonzero constants.
    pub fn is_unit(&self) -> bool {
        matches!(self.0.as_constant(), Some(c) if !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Palindrome(self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Palindrome(self.0.sub(&other.0)?))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Palindrome(self.0.mul(&other.0)?))
    }

    pub fn scale(&self, c: FieldElement) -> Result<Self> {
        Ok(Palindrome(self.0.scale(c)?))
    }

    /// Coefficients in the symmetric basis, `(n, c_n)` with
    /// `self = sum c_n b_n`; one variable only.
    pub fn symmetric_coefficients(&self) -> Result<Vec<(u64, FieldElement)>> {
        if self.0.dim() != 1 {
            return Err(Error::NotOneDimensional(self.0.dim()));
        }
        Ok(self
            .0
            .terms()
            .filter(|(x, _)| x[0] >= 0)
            .map(|(x, c)| (x[0] as u64, c))
            .collect())
    }

    /// Coefficient at `u^deg`, zero for the zero polynomial.
    fn leading(&self) -> Result<(Degree, FieldElement)> {
        let deg = self.degree()?;
        let lead = match deg {
            Degree::NegInfinity => FieldElement::zero(self.0.modulus()),
            Degree::Finite(n) => self.0.coeff(&[n as i64]),
        };
        Ok((deg, lead))
    }
}

impl fmt::Display for Palindrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Palindrome> for LaurentPoly {
    fn from(p: Palindrome) -> Self {
        p.0
    }
}

/// `g + reflect(g)`.
pub fn palindromize(g: &LaurentPoly) -> Palindrome {
    Palindrome(g.add(&g.reflect()).expect("same ring"))
}

/// The symmetric basis element `b_0 = 1`, `b_n = u^n + u^-n`.
pub fn symmetric_basis(n: u64, modulus: Prime) -> Palindrome {
    if n == 0 {
        Palindrome::one(modulus, 1)
    } else {
        let n = n as i64;
        Palindrome(LaurentPoly::from_1d(modulus, &[(n, 1), (-n, 1)]))
    }
}

/// Euclidean division in the one-variable palindrome ring:
/// `f = q·h + r` with `degree(r) < degree(h)`.
///
/// Works directly in the symmetric basis: each step cancels both leading
/// terms of the remainder at once with a multiple of `b_k · h`.
pub fn palindrome_divmod(f: &Palindrome, h: &Palindrome) -> Result<(Palindrome, Palindrome)> {
    f.0.check(&h.0)?;
    let (dh, lead_h) = h.leading()?;
    let dh = match dh {
        Degree::NegInfinity => return Err(Error::DivisionByZero),
        Degree::Finite(n) => n,
    };
    let p = f.0.modulus();
    let lead_h_inv = lead_h.inv()?;
    let mut q = Palindrome::zero(p, 1);
    let mut r = f.clone();
    loop {
        let (dr, lead_r) = r.leading()?;
        let dr = match dr {
            Degree::Finite(n) if n >= dh => n,
            _ => break,
        };
        let factor = lead_r.mul(&lead_h_inv)?;
        let step = symmetric_basis(dr - dh, p).scale(factor)?;
        r = r.sub(&step.mul(h)?)?;
        q = q.add(&step)?;
        debug_assert!(r.degree()? < Degree::Finite(dr));
    }
    Ok((q, r))
}
