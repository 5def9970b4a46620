//! Symplectic cellular automata: 2×2 matrices over the Laurent ring.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{FieldElement, Prime};
use crate::laurent::{symmetric_basis, LatticeVector, LaurentPoly, Palindrome};
use crate::phasespace::{form_sigma_poly, PhaseVector};

/// A 2×2 matrix `((s₊₊, s₊₋), (s₋₊, s₋₋))` of Laurent polynomials.
///
/// Symplecticity is not assumed; use [`ScaMatrix::is_symplectic`] or
/// [`ScaMatrix::classify`] to certify.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaMatrix {
    entries: [[LaurentPoly; 2]; 2],
}

/// Decomposition `s = u^shift · core` with `core ∈ SL(2, P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticCertificate {
    pub shift: LatticeVector,
    pub core: ScaMatrix,
}

impl ScaMatrix {
    pub fn new(pp: LaurentPoly, pm: LaurentPoly, mp: LaurentPoly, mm: LaurentPoly) -> Result<Self> {
        pp.check(&pm)?;
        pp.check(&mp)?;
        pp.check(&mm)?;
        Ok(ScaMatrix {
            entries: [[pp, pm], [mp, mm]],
        })
    }

    pub fn from_rows(rows: [[LaurentPoly; 2]; 2]) -> Result<Self> {
        let [[pp, pm], [mp, mm]] = rows;
        Self::new(pp, pm, mp, mm)
    }

    pub fn identity(modulus: Prime, dim: usize) -> Self {
        Self::diagonal(LaurentPoly::one(modulus, dim), LaurentPoly::one(modulus, dim))
    }

    fn diagonal(a: LaurentPoly, d: LaurentPoly) -> Self {
        let z = LaurentPoly::zero(a.modulus(), a.dim());
        ScaMatrix {
            entries: [[a, z.clone()], [z, d]],
        }
    }

    /// Lattice translation by `a`: `u^a` times the identity.
    pub fn shift(a: &[i64], modulus: Prime) -> Self {
        let m = LaurentPoly::monomial(a, FieldElement::one(modulus));
        Self::diagonal(m.clone(), m)
    }

    /// Lower shear `((1, 0), (c·b_n, 1))` with `b_n = u^n + u^-n` for
    /// `n ≥ 1` and `b_0 = 1`.
    pub fn shear_g(n: u64, c: FieldElement) -> Self {
        let p = c.modulus();
        let lower = symmetric_basis(n, p).scale(c).expect("same modulus").into_poly();
        let one = LaurentPoly::one(p, 1);
        ScaMatrix {
            entries: [[one.clone(), LaurentPoly::zero(p, 1)], [lower, one]],
        }
    }

    /// Upper shear `((1, c·b_n), (0, 1))`, the lower shear conjugated by `f_1`.
    pub fn upper_shear(n: u64, c: FieldElement) -> Self {
        let p = c.modulus();
        let upper = symmetric_basis(n, p).scale(c).expect("same modulus").into_poly();
        let one = LaurentPoly::one(p, 1);
        ScaMatrix {
            entries: [[one.clone(), upper], [LaurentPoly::zero(p, 1), one]],
        }
    }

    /// Local rotation `f_c = ((0, c), (−c⁻¹, 0))`.
    pub fn local_f(c: FieldElement) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroLocalConstant);
        }
        let p = c.modulus();
        Ok(ScaMatrix {
            entries: [
                [LaurentPoly::zero(p, 1), LaurentPoly::constant(c, 1)],
                [LaurentPoly::constant(c.inv()?.neg(), 1), LaurentPoly::zero(p, 1)],
            ],
        })
    }

    /// The matrix `((f, f'), (−h', h))`, after checking `f'h' = 1 − fh`.
    ///
    /// The sign on `h'` makes the determinant `fh + f'h' = 1` in every
    /// characteristic; for p = 2 it is the plain `((f, f'), (h', h))`.
    pub fn from_recipe(
        f: &Palindrome,
        h: &Palindrome,
        f2: &Palindrome,
        h2: &Palindrome,
    ) -> Result<Self> {
        let one = Palindrome::one(f.as_poly().modulus(), f.as_poly().dim());
        let target = one.sub(&f.mul(h)?)?;
        if f2.mul(h2)? != target {
            return Err(Error::FactorizationMismatch);
        }
        Self::new(
            f.as_poly().clone(),
            f2.as_poly().clone(),
            h2.as_poly().neg(),
            h.as_poly().clone(),
        )
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[[LaurentPoly; 2]; 2] {
        &self.entries
    }

    pub fn modulus(&self) -> Prime {
        self.entries[0][0].modulus()
    }

    pub fn dim(&self) -> usize {
        self.entries[0][0].dim()
    }

    fn check(&self, other: &Self) -> Result<()> {
        self.entries[0][0].check(&other.entries[0][0])
    }

    pub fn apply(&self, xi: &PhaseVector) -> Result<PhaseVector> {
        let [[pp, pm], [mp, mm]] = &self.entries;
        PhaseVector::new(
            pp.mul(xi.plus())?.add(&pm.mul(xi.minus())?)?,
            mp.mul(xi.plus())?.add(&mm.mul(xi.minus())?)?,
        )
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let a = &self.entries;
        let b = &other.entries;
        let cell = |i: usize, j: usize| -> Result<LaurentPoly> {
            a[i][0].mul(&b[0][j])?.add(&a[i][1].mul(&b[1][j])?)
        };
        Ok(ScaMatrix {
            entries: [[cell(0, 0)?, cell(0, 1)?], [cell(1, 0)?, cell(1, 1)?]],
        })
    }

    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::identity(self.modulus(), self.dim());
        for _ in 0..exp {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn det(&self) -> LaurentPoly {
        let [[pp, pm], [mp, mm]] = &self.entries;
        pp.mul(mm)
            .and_then(|a| a.sub(&pm.mul(mp)?))
            .expect("entries share a ring")
    }

    /// Multiplies every entry by `u^a`.
    pub fn shifted(&self, a: &[i64]) -> Result<Self> {
        let [[pp, pm], [mp, mm]] = &self.entries;
        Self::new(pp.shift(a)?, pm.shift(a)?, mp.shift(a)?, mm.shift(a)?)
    }

    /// Σ-preservation test on the basis vectors: `Σ(se₁, se₁) = 0`,
    /// `Σ(se₂, se₂) = 0` and `Σ(se₁, se₂) = 1`.
    pub fn is_symplectic(&self) -> bool {
        let [[pp, pm], [mp, mm]] = &self.entries;
        let col1 = PhaseVector::new(pp.clone(), mp.clone()).expect("shared ring");
        let col2 = PhaseVector::new(pm.clone(), mm.clone()).expect("shared ring");
        let s11 = form_sigma_poly(&col1, &col1).expect("shared ring");
        let s22 = form_sigma_poly(&col2, &col2).expect("shared ring");
        let s12 = form_sigma_poly(&col1, &col2).expect("shared ring");
        s11.is_zero() && s22.is_zero() && s12.is_one()
    }

    /// Splits `s = u^a · core` with `core ∈ SL(2, P)`.
    ///
    /// `a` is read off `det(s) = u^{2a}`; every other determinant is rejected.
    pub fn classify(&self) -> Result<SymplecticCertificate> {
        let det = self.det();
        let (exp, c) = det
            .as_monomial()
            .ok_or_else(|| Error::NotSymplectic(format!("determinant {det} is not a monomial")))?;
        if c.value() != 1 {
            return Err(Error::NotSymplectic(format!(
                "determinant {det} has coefficient {}",
                c.value()
            )));
        }
        if exp.iter().any(|e| e % 2 != 0) {
            return Err(Error::NotSymplectic(format!(
                "determinant {det} is not an even power"
            )));
        }
        let shift: LatticeVector = exp.iter().map(|e| e / 2).collect();
        let back: LatticeVector = shift.iter().map(|e| -e).collect();
        let core = self.shifted(&back)?;
        for row in &core.entries {
            for e in row {
                if !e.is_palindrome() {
                    return Err(Error::NotSymplectic(format!(
                        "entry {e} of the de-shifted matrix is not a palindrome"
                    )));
                }
            }
        }
        debug_assert!(core.det().is_one());
        Ok(SymplecticCertificate { shift, core })
    }

    /// Group inverse `u^{-a} · adj(core)`.
    pub fn inverse(&self) -> Result<Self> {
        let cert = self.classify()?;
        let [[pp, pm], [mp, mm]] = &cert.core.entries;
        let adj = Self::new(mm.clone(), pm.neg(), mp.neg(), pp.clone())?;
        let back: LatticeVector = cert.shift.iter().map(|e| -e).collect();
        adj.shifted(&back)
    }

    /// Union of the supports of the four entries.
    pub fn neighborhood(&self) -> BTreeSet<LatticeVector> {
        self.entries
            .iter()
            .flatten()
            .flat_map(|e| e.support().cloned())
            .collect()
    }

    /// Largest `|x|_inf` over the neighborhood (0 for the zero matrix).
    pub fn radius(&self) -> u64 {
        self.entries
            .iter()
            .flatten()
            .filter_map(|e| e.radius())
            .max()
            .unwrap_or(0)
    }

    /// Largest one-variable degree over the entries.
    pub fn max_degree(&self) -> Result<u64> {
        let mut m = 0;
        for e in self.entries.iter().flatten() {
            if let Some(d) = e.degree()?.finite() {
                m = m.max(d);
            }
        }
        Ok(m)
    }
}

impl fmt::Display for ScaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[pp, pm], [mp, mm]] = &self.entries;
        write!(f, "(({pp}, {pm}), ({mp}, {mm}))")
    }
}
