//! Arithmetic in the prime field F_p with a runtime modulus.

use std::fmt;

use crate::error::{Error, Result};

/// Largest accepted modulus; keeps every product of two residues inside `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// A prime modulus, checked once at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) {
            return Err(Error::InvalidPrime(p));
        }
        let mut k = 2u64;
        while k * k <= p {
            if p.is_multiple_of(k) {
                return Err(Error::InvalidPrime(p));
            }
            k += 1;
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, value: i64) -> u64 {
        value.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub(crate) fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub(crate) fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub(crate) fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.0
    }

    pub(crate) fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn inv(self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        // Fermat: a^(p-2) = a^-1.
        Ok(self.pow(a, self.0 - 2))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue modulo a [`Prime`]. The stored value is always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: Prime,
}

#[allow(clippy::should_implement_trait)]
impl FieldElement {
    pub fn new(value: i64, modulus: Prime) -> Self {
        FieldElement {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub(crate) fn from_reduced(value: u64, modulus: Prime) -> Self {
        debug_assert!(value < modulus.get());
        FieldElement { value, modulus }
    }

    pub fn zero(modulus: Prime) -> Self {
        Self::from_reduced(0, modulus)
    }

    pub fn one(modulus: Prime) -> Self {
        Self::from_reduced(1, modulus)
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Self) -> Result<Prime> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        Ok(self.modulus)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let p = self.check(other)?;
        Ok(Self::from_reduced(p.add(self.value, other.value), p))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let p = self.check(other)?;
        Ok(Self::from_reduced(p.sub(self.value, other.value), p))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let p = self.check(other)?;
        Ok(Self::from_reduced(p.mul(self.value, other.value), p))
    }

    pub fn neg(&self) -> Self {
        Self::from_reduced(self.modulus.neg(self.value), self.modulus)
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self::from_reduced(self.modulus.pow(self.value, exp), self.modulus)
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self::from_reduced(
            self.modulus.inv(self.value)?,
            self.modulus,
        ))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: i64, p: u64) -> FieldElement {
        FieldElement::new(v, Prime::new(p).unwrap())
    }

    #[test]
    fn primality() {
        for p in [2, 3, 5, 7, 11, 13, 31, 97, 65537] {
            assert!(Prime::new(p).is_ok(), "{p}");
        }
        for n in [0, 1, 4, 9, 15, 25, 91, 65535] {
            assert_eq!(Prime::new(n), Err(Error::InvalidPrime(n)));
        }
    }

    #[test]
    fn worked_examples() {
        assert_eq!(fe(1, 2).add(&fe(1, 2)).unwrap(), fe(0, 2));
        assert_eq!(fe(2, 5).add(&fe(4, 5)).unwrap(), fe(1, 5));
        for x in 0..3 {
            assert_eq!(fe(0, 3).add(&fe(x, 3)).unwrap(), fe(x, 3));
        }
        assert_eq!(fe(2, 5).mul(&fe(3, 5)).unwrap(), fe(1, 5));
        for x in 0..7 {
            assert_eq!(fe(1, 7).mul(&fe(x, 7)).unwrap(), fe(x, 7));
            assert_eq!(fe(0, 7).mul(&fe(x, 7)).unwrap(), fe(0, 7));
        }
        assert_eq!(fe(1, 2).inv().unwrap(), fe(1, 2));
        assert_eq!(fe(2, 5).inv().unwrap(), fe(3, 5));
        assert_eq!(fe(4, 7).inv().unwrap(), fe(2, 7));
        assert_eq!(fe(1, 2).neg(), fe(1, 2));
        assert_eq!(fe(2, 5).pow(4), fe(1, 5));
        assert_eq!(fe(0, 3).sub(&fe(1, 3)).unwrap(), fe(2, 3));
    }

    #[test]
    fn error_paths() {
        assert_eq!(fe(0, 5).inv(), Err(Error::InverseOfZero));
        assert_eq!(
            fe(1, 3).add(&fe(1, 5)),
            Err(Error::ModulusMismatch { left: 3, right: 5 })
        );
        assert!(fe(1, 3).mul(&fe(1, 2)).is_err());
        assert!(fe(1, 3).sub(&fe(1, 2)).is_err());
    }

    #[test]
    fn negative_inputs_reduce() {
        assert_eq!(fe(-1, 5).value(), 4);
        assert_eq!(fe(-10, 3).value(), 2);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u64, 3, 5, 7] {
            let all: Vec<_> = (0..p as i64).map(|v| fe(v, p)).collect();
            let zero = fe(0, p);
            let one = fe(1, p);
            for a in &all {
                assert_eq!(a.add(&zero).unwrap(), *a);
                assert_eq!(a.mul(&one).unwrap(), *a);
                assert_eq!(a.add(&a.neg()).unwrap(), zero);
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), one);
                }
                for b in &all {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    assert_eq!(a.sub(b).unwrap(), a.add(&b.neg()).unwrap());
                    for c in &all {
                        assert_eq!(
                            a.add(b).unwrap().add(c).unwrap(),
                            a.add(&b.add(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.mul(b).unwrap().mul(c).unwrap(),
                            a.mul(&b.mul(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.mul(&b.add(c).unwrap()).unwrap(),
                            a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn double_inverse_exhaustive() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            for v in 1..p as i64 {
                let a = fe(v, p);
                assert_eq!(a.inv().unwrap().inv().unwrap(), a);
            }
        }
    }
}
