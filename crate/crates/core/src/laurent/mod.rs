//! Laurent polynomials over F_p in `d` variables.
//!
//! A [`LaurentPoly`] is a finitely supported map from exponent vectors in
//! Z^d to nonzero residues. The same object doubles as a finitely supported
//! lattice function: the coefficient at `u^x` is the value at site `x`, and
//! convolution of lattice functions is polynomial multiplication.

mod palindrome;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{FieldElement, Prime};

pub use palindrome::{palindrome_divmod, palindromize, symmetric_basis, Palindrome};

/// A point of the lattice Z^d, also the exponent vector of a monomial.
pub type LatticeVector = Vec<i64>;

/// Degree of a one-variable Laurent polynomial: the largest absolute
/// exponent, or `NegInfinity` for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(n) => Some(n),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    modulus: Prime,
    dim: usize,
    // invariant: no zero values, every key has length `dim`
    terms: BTreeMap<LatticeVector, u64>,
}

#[allow(clippy::should_implement_trait)]
impl LaurentPoly {
    pub fn zero(modulus: Prime, dim: usize) -> Self {
        assert!(dim > 0, "lattice dimension must be positive");
        LaurentPoly {
            modulus,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(modulus: Prime, dim: usize) -> Self {
        Self::constant(FieldElement::one(modulus), dim)
    }

    pub fn constant(c: FieldElement, dim: usize) -> Self {
        let mut f = Self::zero(c.modulus(), dim);
        f.insert_add(vec![0; dim], c.value());
        f
    }

    /// `c · u^x`.
    pub fn monomial(exponent: &[i64], c: FieldElement) -> Self {
        let mut f = Self::zero(c.modulus(), exponent.len());
        f.insert_add(exponent.to_vec(), c.value());
        f
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate and coefficients are reduced mod p.
    pub fn from_terms<I>(modulus: Prime, dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticeVector, i64)>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut f = Self::zero(modulus, dim);
        for (x, c) in terms {
            if x.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: x.len(),
                });
            }
            f.insert_add(x, modulus.reduce(c));
        }
        Ok(f)
    }

    /// One-variable shorthand: `from_1d(p, &[(exponent, coeff), ...])`.
    pub fn from_1d(modulus: Prime, terms: &[(i64, i64)]) -> Self {
        Self::from_terms(modulus, 1, terms.iter().map(|&(e, c)| (vec![e], c)))
            .expect("one-dimensional exponents")
    }

    pub(crate) fn insert_add(&mut self, x: LatticeVector, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.modulus;
        match self.terms.get_mut(&x) {
            Some(v) => {
                *v = p.add(*v, c);
                if *v == 0 {
                    self.terms.remove(&x);
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(x, &c)| c == 1 && x.iter().all(|&e| e == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at `u^x` (value of the lattice function at site `x`).
    pub fn coeff(&self, x: &[i64]) -> FieldElement {
        FieldElement::from_reduced(self.terms.get(x).copied().unwrap_or(0), self.modulus)
    }

    pub(crate) fn raw_coeff(&self, x: &[i64]) -> u64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVector, FieldElement)> + '_ {
        self.terms
            .iter()
            .map(move |(x, &c)| (x, FieldElement::from_reduced(c, self.modulus)))
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<LatticeVector, u64> {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &LatticeVector> + '_ {
        self.terms.keys()
    }

    pub(crate) fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (x, &c) in &other.terms {
            out.insert_add(x.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (x, &c) in &other.terms {
            out.insert_add(x.clone(), self.modulus.neg(c));
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let p = self.modulus;
        LaurentPoly {
            modulus: p,
            dim: self.dim,
            terms: self.terms.iter().map(|(x, &c)| (x.clone(), p.neg(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.modulus;
        let mut out = Self::zero(p, self.dim);
        for (x, &a) in &self.terms {
            for (y, &b) in &other.terms {
                let z = x.iter().zip(y).map(|(i, j)| i + j).collect();
                out.insert_add(z, p.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: FieldElement) -> Result<Self> {
        if c.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: c.modulus().get(),
            });
        }
        if c.is_zero() {
            return Ok(Self::zero(self.modulus, self.dim));
        }
        let p = self.modulus;
        Ok(LaurentPoly {
            modulus: p,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(x, &v)| (x.clone(), p.mul(v, c.value())))
                .collect(),
        })
    }

    /// Multiplication by the monomial `u^a`, i.e. translation of the lattice
    /// function by `a`.
    pub fn shift(&self, a: &[i64]) -> Result<Self> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: a.len(),
            });
        }
        Ok(LaurentPoly {
            modulus: self.modulus,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(x, &c)| (x.iter().zip(a).map(|(i, j)| i + j).collect(), c))
                .collect(),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.modulus, self.dim);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// The involution `u_k -> u_k^-1` (reflection of the lattice at the origin).
    pub fn reflect(&self) -> Self {
        LaurentPoly {
            modulus: self.modulus,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(x, &c)| (x.iter().map(|e| -e).collect(), c))
                .collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        self.terms
            .iter()
            .all(|(x, &c)| self.raw_coeff(&x.iter().map(|e| -e).collect::<Vec<_>>()) == c)
    }

    /// Largest absolute exponent; only defined for one variable.
    pub fn degree(&self) -> Result<Degree> {
        if self.dim != 1 {
            return Err(Error::NotOneDimensional(self.dim));
        }
        Ok(self
            .terms
            .keys()
            .map(|x| x[0].unsigned_abs())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite))
    }

    /// Largest `|x|_inf` over the support, `None` for zero.
    pub fn radius(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|x| x.iter().map(|e| e.unsigned_abs()).max().unwrap_or(0))
            .max()
    }

    /// Units of the full Laurent ring are exactly the monomials `c·u^x`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// If `self = c·u^x`, returns `(x, c)`.
    pub fn as_monomial(&self) -> Option<(&LatticeVector, FieldElement)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms().next()
    }

    /// The constant term when `self` is a constant (or zero).
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(FieldElement::zero(self.modulus)),
            1 => {
                let (x, c) = self.terms().next()?;
                x.iter().all(|&e| e == 0).then_some(c)
            }
            _ => None,
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders in the input grammar, exponents ascending: `u^-1 + 1 + 2u^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (x, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let is_const = x.iter().all(|&e| e == 0);
            if c != 1 || is_const {
                write!(f, "{c}")?;
            }
            let mut first = true;
            for (k, &e) in x.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if self.dim == 1 {
                    write!(f, "u")?;
                } else {
                    write!(f, "u{}", k + 1)?;
                }
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn poly(n: u64, terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_1d(p(n), terms)
    }

    #[test]
    fn addition_examples() {
        let f = poly(2, &[(0, 1), (1, 1)]);
        assert!(f.add(&f).unwrap().is_zero());
        let z = LaurentPoly::zero(p(2), 1);
        assert_eq!(f.add(&z).unwrap(), f);
        let g = poly(3, &[(1, 1), (-1, 1)]);
        assert_eq!(
            g.add(&LaurentPoly::one(p(3), 1)).unwrap(),
            poly(3, &[(-1, 1), (0, 1), (1, 1)])
        );
    }

    #[test]
    fn multiplication_examples() {
        let f = poly(2, &[(0, 1), (1, 1)]);
        let g = poly(2, &[(0, 1), (-1, 1)]);
        assert_eq!(f.mul(&g).unwrap(), poly(2, &[(1, 1), (-1, 1)]));
        let ua = poly(5, &[(3, 1)]);
        let ub = poly(5, &[(-7, 1)]);
        assert_eq!(ua.mul(&ub).unwrap(), poly(5, &[(-4, 1)]));
        let h = poly(5, &[(-2, 3), (4, 1)]);
        assert_eq!(h.mul(&LaurentPoly::one(p(5), 1)).unwrap(), h);
    }

    #[test]
    fn mismatches_are_errors() {
        let a = poly(2, &[(0, 1)]);
        let b = poly(3, &[(0, 1)]);
        assert!(matches!(a.add(&b), Err(Error::ModulusMismatch { .. })));
        let c = LaurentPoly::one(p(2), 2);
        assert!(matches!(a.mul(&c), Err(Error::DimensionMismatch { .. })));
        assert!(LaurentPoly::from_terms(p(2), 2, vec![(vec![1], 1)]).is_err());
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(poly(3, &[(1, 1)]).reflect(), poly(3, &[(-1, 1)]));
        assert_eq!(
            poly(3, &[(0, 1), (1, 1), (2, 1)]).reflect(),
            poly(3, &[(0, 1), (-1, 1), (-2, 1)])
        );
        let b1 = poly(3, &[(1, 1), (-1, 1)]);
        assert_eq!(b1.reflect(), b1);
    }

    #[test]
    fn palindrome_predicate() {
        assert!(poly(5, &[(0, 1), (1, 1), (-1, 1)]).is_palindrome());
        assert!(!poly(5, &[(1, 1)]).is_palindrome());
        assert!(LaurentPoly::zero(p(5), 1).is_palindrome());
        assert!(!poly(5, &[(1, 1), (-1, 2)]).is_palindrome());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(
            poly(7, &[(3, 1), (0, 1), (-3, 1)]).degree().unwrap(),
            Degree::Finite(3)
        );
        assert_eq!(poly(7, &[(0, 5)]).degree().unwrap(), Degree::Finite(0));
        assert_eq!(
            LaurentPoly::zero(p(7), 1).degree().unwrap(),
            Degree::NegInfinity
        );
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(
            LaurentPoly::one(p(7), 2).degree(),
            Err(Error::NotOneDimensional(2))
        );
    }

    #[test]
    fn unit_examples() {
        assert!(poly(5, &[(2, 3)]).is_unit());
        assert!(!poly(5, &[(0, 1), (1, 1)]).is_unit());
        assert!(!LaurentPoly::zero(p(5), 1).is_unit());
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(2, &[(0, 1), (1, 1), (-1, 1)]).to_string(), "u^-1 + 1 + u");
        assert_eq!(poly(5, &[(3, 2), (0, 3)]).to_string(), "3 + 2u^3");
        assert_eq!(LaurentPoly::zero(p(5), 1).to_string(), "0");
        let f = LaurentPoly::from_terms(p(3), 2, vec![(vec![1, -2], 2), (vec![0, 1], 1)]).unwrap();
        assert_eq!(f.to_string(), "u2 + 2u1*u2^-2");
    }
}
