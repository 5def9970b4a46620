//! Dense-matrix ground truth for the symbolic layers.
//!
//! Weyl operators on a finite one-dimensional window are built as explicit
//! complex matrices, `w(a, b)|q⟩ = ε^{−a q} |q + b⟩` with `ε = exp(2πi/p)`.
//! This sign makes `w(ξ+η) = ε^{β(ξ,η)} w(ξ) w(η)` hold with
//! `β(ξ,η) = Σ ξ₊η₋` for every p (for p = 2 the sign is immaterial).
//! The Weyl relation, commutation phases and Clifford action are
//! checked numerically against `beta`, `sigma` and the phase functions.
//! The matrices are generic over the real scalar.

mod complex;
mod matrix;

use num_traits::{Float, FloatConst};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use complex::Complex;
pub use matrix::DenseMatrix;

use crate::cocycle::{default_phase, PhaseFunction};
use crate::error::{Error, Result};
use crate::ffield::{FieldElement, Prime};
use crate::laurent::{LaurentPoly, Palindrome};
use crate::phasespace::{beta, sigma, PhaseVector};
use crate::sca::ScaMatrix;

/// Hard cap on the dense dimension `p^sites`.
pub const MAX_DENSE_DIM: u128 = 4096;

/// Real scalar usable by the oracle, with its comparison tolerance.
pub trait OracleScalar: Float + FloatConst + std::fmt::Debug {
    fn tolerance() -> Self;
}

impl OracleScalar for f64 {
    fn tolerance() -> Self {
        1e-10
    }
}

impl OracleScalar for f32 {
    fn tolerance() -> Self {
        1e-4
    }
}

/// A contiguous interval of sites `[lo, hi]` on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    lo: i64,
    hi: i64,
    modulus: Prime,
}

impl Window {
    pub fn new(lo: i64, hi: i64, modulus: Prime) -> Result<Self> {
        if hi < lo {
            return Err(Error::Input(format!("empty window [{lo}, {hi}]")));
        }
        let dim = (modulus.get() as u128).checked_pow((hi - lo + 1) as u32);
        match dim {
            Some(n) if n <= MAX_DENSE_DIM => Ok(Window { lo, hi, modulus }),
            Some(n) => Err(Error::WindowTooLarge(n)),
            None => Err(Error::WindowTooLarge(u128::MAX)),
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn sites(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn dense_dim(&self) -> usize {
        (self.modulus.get() as usize).pow(self.sites() as u32)
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    fn contains(&self, v: &PhaseVector) -> bool {
        v.support().iter().all(|x| (self.lo..=self.hi).contains(&x[0]))
    }
}

fn single_cell<T: OracleScalar>(plus: u64, minus: u64, p: u64) -> DenseMatrix<T> {
    let mut m = DenseMatrix::zeros(p as usize);
    for q in 0..p {
        m.set(
            ((q + minus) % p) as usize,
            q as usize,
            Complex::root_of_unity(p - plus * q % p, p),
        );
    }
    m
}

/// `w(ξ) = ⊗_x w(ξ(x))` over the window, leftmost site most significant.
pub fn weyl_matrix<T: OracleScalar>(xi: &PhaseVector, w: &Window) -> Result<DenseMatrix<T>> {
    if xi.dim() != 1 {
        return Err(Error::NotOneDimensional(xi.dim()));
    }
    if xi.modulus() != w.modulus {
        return Err(Error::ModulusMismatch {
            left: w.modulus.get(),
            right: xi.modulus().get(),
        });
    }
    if !w.contains(xi) {
        return Err(Error::OutsideWindow {
            what: xi.to_string(),
            lo: w.lo,
            hi: w.hi,
        });
    }
    let p = w.modulus.get();
    let mut out = DenseMatrix::identity(1);
    for x in w.lo..=w.hi {
        let cell = single_cell(
            xi.plus().coeff(&[x]).value(),
            xi.minus().coeff(&[x]).value(),
            p,
        );
        out = out.kron(&cell);
    }
    Ok(out)
}

fn epsilon_power<T: OracleScalar>(k: FieldElement) -> Complex<T> {
    Complex::root_of_unity(k.value(), k.modulus().get())
}

/// `w(ξ+η) = ε^{β(ξ,η)} w(ξ) w(η)` within tolerance.
pub fn check_weyl_relation(xi: &PhaseVector, eta: &PhaseVector, w: &Window) -> Result<bool> {
    let lhs = weyl_matrix::<f64>(&xi.add(eta)?, w)?;
    let rhs = weyl_matrix::<f64>(xi, w)?
        .mul(&weyl_matrix(eta, w)?)
        .scale(epsilon_power(beta(xi, eta)?));
    Ok(lhs.max_diff(&rhs) < f64::tolerance())
}

/// `w(η) w(ξ) = ε^{σ(ξ,η)} w(ξ) w(η)` within tolerance.
pub fn check_commutation(xi: &PhaseVector, eta: &PhaseVector, w: &Window) -> Result<bool> {
    let wx = weyl_matrix::<f64>(xi, w)?;
    let we = weyl_matrix::<f64>(eta, w)?;
    let lhs = we.mul(&wx);
    let rhs = wx.mul(&we).scale(epsilon_power(sigma(xi, eta)?));
    Ok(lhs.max_diff(&rhs) < f64::tolerance())
}

/// Reads `k` off the group commutator `w(η) w(ξ) w(η)† w(ξ)† = ε^k · 1`;
/// `None` if it is not a p-th root of unity times the identity.
pub fn commutation_phase(xi: &PhaseVector, eta: &PhaseVector, w: &Window) -> Result<Option<u64>> {
    let wx = weyl_matrix::<f64>(xi, w)?;
    let we = weyl_matrix::<f64>(eta, w)?;
    let comm = we.mul(&wx).mul(&we.adjoint()).mul(&wx.adjoint());
    let p = w.modulus.get();
    let id = DenseMatrix::<f64>::identity(w.dense_dim());
    Ok((0..p).find(|&k| {
        comm.max_diff(&id.scale(Complex::root_of_unity(k, p))) < f64::tolerance()
    }))
}

/// Every phase-space vector supported in `[lo, hi]`.
fn all_vectors(lo: i64, hi: i64, p: Prime) -> Result<Vec<PhaseVector>> {
    let sites = (hi - lo + 1) as u32;
    let count = p.get().pow(2 * sites);
    (0..count)
        .map(|mut idx| {
            let mut plus = Vec::new();
            let mut minus = Vec::new();
            for x in lo..=hi {
                plus.push((vec![x], (idx % p.get()) as i64));
                idx /= p.get();
                minus.push((vec![x], (idx % p.get()) as i64));
                idx /= p.get();
            }
            PhaseVector::new(
                LaurentPoly::from_terms(p, 1, plus)?,
                LaurentPoly::from_terms(p, 1, minus)?,
            )
        })
        .collect()
}

/// Vectors supported on at most two sites of the window, zero included.
pub fn vectors_on_two_sites(w: &Window) -> Result<Vec<PhaseVector>> {
    let mut out = vec![PhaseVector::zero(w.modulus, 1)];
    let nonzero_cells: Vec<(i64, i64)> = (0..w.modulus.get() as i64)
        .flat_map(|a| (0..w.modulus.get() as i64).map(move |b| (a, b)))
        .filter(|&c| c != (0, 0))
        .collect();
    let cell = |x: i64, (a, b): (i64, i64)| -> Result<PhaseVector> {
        PhaseVector::new(
            LaurentPoly::from_1d(w.modulus, &[(x, a)]),
            LaurentPoly::from_1d(w.modulus, &[(x, b)]),
        )
    };
    for x in w.lo..=w.hi {
        for &c in &nonzero_cells {
            out.push(cell(x, c)?);
        }
    }
    for x in w.lo..=w.hi {
        for y in x + 1..=w.hi {
            for &c in &nonzero_cells {
                for &e in &nonzero_cells {
                    out.push(cell(x, c)?.add(&cell(y, e)?)?);
                }
            }
        }
    }
    Ok(out)
}

/// Verifies that `A(ξ) = φ(ξ) w(sξ)` obeys the Weyl relation
/// `A(ξ+η) = ε^{β(ξ,η)} A(ξ) A(η)` for vectors supported in the inner
/// window (the window shrunk by the automaton's radius on both sides).
///
/// Pairs are exhaustive when there are at most 256 inner vectors, otherwise
/// 500 pseudo-random pairs are drawn.
pub fn check_clifford_action(s: &ScaMatrix, phi: &PhaseFunction, w: &Window) -> Result<bool> {
    if s.dim() != 1 {
        return Err(Error::NotOneDimensional(s.dim()));
    }
    if phi.automaton() != s {
        return Err(Error::Input("phase function belongs to a different automaton".into()));
    }
    let r = s.radius() as i64;
    let (lo, hi) = (w.lo + r, w.hi - r);
    if lo > hi {
        return Err(Error::Input(format!(
            "window [{}, {}] has no inner sites for radius {r}",
            w.lo, w.hi
        )));
    }
    let p = w.modulus;
    let inner_count = (p.get() as u128).pow(2 * (hi - lo + 1) as u32);
    let tol = f64::tolerance();
    let order = phi.order();
    let action = |xi: &PhaseVector| -> Result<DenseMatrix<f64>> {
        let img = s.apply(xi)?;
        let phase = Complex::root_of_unity(phi.evaluate(xi)?.value(), order);
        Ok(weyl_matrix::<f64>(&img, w)?.scale(phase))
    };
    let check = |xi: &PhaseVector, eta: &PhaseVector, a: &DenseMatrix<f64>, b: &DenseMatrix<f64>, ab: &DenseMatrix<f64>| -> Result<bool> {
        let rhs = a.mul(b).scale(epsilon_power(beta(xi, eta)?));
        Ok(ab.max_diff(&rhs) < tol)
    };

    if inner_count <= 256 {
        let vectors = all_vectors(lo, hi, p)?;
        let images = vectors.iter().map(action).collect::<Result<Vec<_>>>()?;
        let index = |v: &PhaseVector| vectors.iter().position(|u| u == v);
        for (i, xi) in vectors.iter().enumerate() {
            for (j, eta) in vectors.iter().enumerate() {
                let sum = xi.add(eta)?;
                let k = index(&sum).expect("inner vectors are closed under addition");
                if !check(xi, eta, &images[i], &images[j], &images[k])? {
                    return Ok(false);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc1ff);
        let random = |rng: &mut ChaCha8Rng| -> Result<PhaseVector> {
            let terms = |rng: &mut ChaCha8Rng| -> Vec<(i64, i64)> {
                (lo..=hi).map(|x| (x, rng.gen_range(0..p.get()) as i64)).collect()
            };
            let plus = terms(rng);
            let minus = terms(rng);
            PhaseVector::new(LaurentPoly::from_1d(p, &plus), LaurentPoly::from_1d(p, &minus))
        };
        for _ in 0..500 {
            let xi = random(&mut rng)?;
            let eta = random(&mut rng)?;
            let sum = xi.add(&eta)?;
            if !check(&xi, &eta, &action(&xi)?, &action(&eta)?, &action(&sum)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One line of the self-test report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    pub cases: usize,
}

/// Automata exercised by the Clifford-action check: identity, shift(1),
/// every `f_c`, `g_1`, and three recipe-built matrices.
pub fn reference_automata(p: Prime) -> Result<Vec<(String, ScaMatrix)>> {
    let mut out = vec![
        ("identity".to_string(), ScaMatrix::identity(p, 1)),
        ("shift(1)".to_string(), ScaMatrix::shift(&[1], p)),
    ];
    for c in 1..p.get() {
        out.push((format!("f_{c}"), ScaMatrix::local_f(FieldElement::new(c as i64, p))?));
    }
    out.push(("g_1".to_string(), ScaMatrix::shear_g(1, FieldElement::one(p))));
    let pal = |t: &[(i64, i64)]| Palindrome::new(LaurentPoly::from_1d(p, t));
    let b1: &[(i64, i64)] = &[(1, 1), (-1, 1)];
    let recipes = [
        (pal(&[(0, 1), (1, 1), (-1, 1)])?, pal(&[(0, 1)])?),
        (pal(b1)?, Palindrome::zero(p, 1)),
        (pal(&[(0, 1)])?, pal(b1)?),
    ];
    for (i, (f, h)) in recipes.iter().enumerate() {
        let one = Palindrome::one(p, 1);
        let f2 = one.sub(&f.mul(h)?)?;
        out.push((format!("recipe_{}", i + 1), ScaMatrix::from_recipe(f, h, &f2, &one)?));
    }
    Ok(out)
}

/// Runs every oracle check class on a window of `sites` sites.
pub fn selftest(p: Prime, sites: usize) -> Result<Vec<CheckReport>> {
    if sites == 0 {
        return Err(Error::Input("window needs at least one site".into()));
    }
    let w = Window::new(0, sites as i64 - 1, p)?;
    let vectors = vectors_on_two_sites(&w)?;
    let mut reports = Vec::new();

    let mut ok = true;
    for v in &vectors {
        ok &= weyl_matrix::<f64>(v, &w)?.is_unitary(f64::tolerance());
    }
    reports.push(CheckReport { check: "unitarity".into(), passed: ok, cases: vectors.len() });

    let mats = vectors
        .iter()
        .map(|v| weyl_matrix::<f64>(v, &w))
        .collect::<Result<Vec<_>>>()?;
    let index = |v: &PhaseVector| vectors.iter().position(|u| u == v);
    let tol = f64::tolerance();
    let (mut relation_ok, mut relation_cases) = (true, 0);
    let (mut comm_ok, mut comm_cases) = (true, 0);
    for (i, xi) in vectors.iter().enumerate() {
        for (j, eta) in vectors.iter().enumerate() {
            let prod = mats[i].mul(&mats[j]);
            let sum = xi.add(eta)?;
            let sum_mat = match index(&sum) {
                Some(k) => mats[k].clone(),
                None => weyl_matrix(&sum, &w)?,
            };
            relation_cases += 1;
            relation_ok &= sum_mat.max_diff(&prod.scale(epsilon_power(beta(xi, eta)?))) < tol;
            comm_cases += 1;
            let reversed = mats[j].mul(&mats[i]);
            comm_ok &= reversed.max_diff(&prod.scale(epsilon_power(sigma(xi, eta)?))) < tol;
        }
    }
    reports.push(CheckReport { check: "weyl_relation".into(), passed: relation_ok, cases: relation_cases });
    reports.push(CheckReport { check: "commutation".into(), passed: comm_ok, cases: comm_cases });

    // numerically extracted commutator phase against the symbolic σ, single-site pairs
    let (mut extract_ok, mut extract_cases) = (true, 0);
    let single: Vec<_> = vectors.iter().filter(|v| v.support().len() <= 1).collect();
    for xi in &single {
        for eta in &single {
            extract_cases += 1;
            extract_ok &= commutation_phase(xi, eta, &w)? == Some(sigma(xi, eta)?.value());
        }
    }
    reports.push(CheckReport { check: "commutation_phase".into(), passed: extract_ok, cases: extract_cases });

    let (mut action_ok, mut action_cases) = (true, 0);
    for (_, s) in reference_automata(p)? {
        let phi = default_phase(&s)?;
        let win = action_window(&s, p, 1)?;
        action_cases += 1;
        action_ok &= check_clifford_action(&s, &phi, &win)?;
    }
    reports.push(CheckReport { check: "clifford_action".into(), passed: action_ok, cases: action_cases });

    if p.get() == 2 {
        let f1 = ScaMatrix::local_f(FieldElement::one(p))?;
        let phi = default_phase(&f1)?;
        let bad = PhaseFunction::new(f1.clone(), phi.gen_plus().value() as i64 + 1, phi.gen_minus().value() as i64)?;
        let detected = !check_clifford_action(&f1, &bad, &action_window(&f1, p, 1)?)?;
        reports.push(CheckReport { check: "corrupted_phase_detected".into(), passed: detected, cases: 1 });
    }
    Ok(reports)
}

/// Smallest window around the origin whose inner part has `inner` sites.
pub fn action_window(s: &ScaMatrix, p: Prime, inner: i64) -> Result<Window> {
    let r = s.radius() as i64;
    Window::new(-r, inner - 1 + r, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn fe(v: i64, n: u64) -> FieldElement {
        FieldElement::new(v, p(n))
    }

    fn close(m: &DenseMatrix<f64>, entries: &[[(f64, f64); 2]; 2]) -> bool {
        let mut e = DenseMatrix::zeros(2);
        for (i, row) in entries.iter().enumerate() {
            for (j, &(re, im)) in row.iter().enumerate() {
                e.set(i, j, Complex::new(re, im));
            }
        }
        m.max_diff(&e) < 1e-12
    }

    #[test]
    fn pauli_matrices() {
        let w = Window::new(0, 0, p(2)).unwrap();
        let z = weyl_matrix::<f64>(&PhaseVector::e_plus(&[0], p(2)), &w).unwrap();
        assert!(close(&z, &[[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (-1.0, 0.0)]]));
        let x = weyl_matrix::<f64>(&PhaseVector::e_minus(&[0], p(2)), &w).unwrap();
        assert!(close(&x, &[[(0.0, 0.0), (1.0, 0.0)], [(1.0, 0.0), (0.0, 0.0)]]));
        let id = weyl_matrix::<f64>(&PhaseVector::zero(p(2), 1), &w).unwrap();
        assert_eq!(id.max_diff(&DenseMatrix::identity(2)), 0.0);
        // w(1,1) = Z·X up to the Weyl phase: [[0,1],[-1,0]] = i·Y
        let y = PhaseVector::e_plus(&[0], p(2)).add(&PhaseVector::e_minus(&[0], p(2))).unwrap();
        let wy = weyl_matrix::<f64>(&y, &w).unwrap();
        assert!(close(&wy, &[[(0.0, 0.0), (-1.0, 0.0)], [(1.0, 0.0), (0.0, 0.0)]]));
    }

    #[test]
    fn f32_scalar_builds_the_same_operators() {
        let w = Window::new(-1, 1, p(3)).unwrap();
        let xi = PhaseVector::new(
            LaurentPoly::from_1d(p(3), &[(-1, 1), (1, 2)]),
            LaurentPoly::from_1d(p(3), &[(0, 2)]),
        )
        .unwrap();
        let m32 = weyl_matrix::<f32>(&xi, &w).unwrap();
        let m64 = weyl_matrix::<f64>(&xi, &w).unwrap();
        assert!(m32.is_unitary(f32::tolerance()));
        for i in 0..27 {
            for j in 0..27 {
                let (a, b) = (m32.get(i, j), m64.get(i, j));
                assert!((a.re as f64 - b.re).abs() < 1e-5 && (a.im as f64 - b.im).abs() < 1e-5);
            }
        }
    }

    #[test]
    fn weyl_relation_examples() {
        let w = Window::new(0, 0, p(2)).unwrap();
        let z = PhaseVector::e_plus(&[0], p(2));
        let x = PhaseVector::e_minus(&[0], p(2));
        assert_eq!(beta(&z, &x).unwrap().value(), 1);
        assert!(check_weyl_relation(&z, &x, &w).unwrap());
        assert!(check_weyl_relation(&PhaseVector::zero(p(2), 1), &x, &w).unwrap());
        for prime in [2, 3] {
            let w = Window::new(0, 0, p(prime)).unwrap();
            let cells = all_vectors(0, 0, p(prime)).unwrap();
            assert_eq!(cells.len() as u64, prime * prime);
            for a in &cells {
                for b in &cells {
                    assert!(check_weyl_relation(a, b, &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn commutation_examples() {
        let w = Window::new(0, 1, p(2)).unwrap();
        let z = PhaseVector::e_plus(&[0], p(2));
        let x = PhaseVector::e_minus(&[0], p(2));
        assert_eq!(sigma(&z, &x).unwrap().value(), 1);
        assert!(check_commutation(&z, &x, &w).unwrap());
        assert_eq!(commutation_phase(&z, &x, &w).unwrap(), Some(1));
        let x1 = PhaseVector::e_minus(&[1], p(2));
        assert_eq!(commutation_phase(&z, &x1, &w).unwrap(), Some(0));
        assert!(check_commutation(&z, &z, &w).unwrap());
    }

    #[test]
    fn window_limits() {
        assert!(Window::new(0, 11, p(2)).is_ok());
        assert!(matches!(Window::new(0, 12, p(2)), Err(Error::WindowTooLarge(8192))));
        assert!(Window::new(2, 1, p(2)).is_err());
        let w = Window::new(0, 1, p(2)).unwrap();
        let far = PhaseVector::e_plus(&[5], p(2));
        assert!(matches!(weyl_matrix::<f64>(&far, &w), Err(Error::OutsideWindow { .. })));
        assert!(check_weyl_relation(&far, &far, &w).is_err());
    }

    #[test]
    fn clifford_action_examples() {
        let id = ScaMatrix::identity(p(2), 1);
        let phi = default_phase(&id).unwrap();
        assert!(check_clifford_action(&id, &phi, &Window::new(0, 1, p(2)).unwrap()).unwrap());

        let f1 = ScaMatrix::local_f(fe(1, 2)).unwrap();
        let phi = default_phase(&f1).unwrap();
        let w = Window::new(0, 0, p(2)).unwrap();
        assert!(check_clifford_action(&f1, &phi, &w).unwrap());

        let bad = PhaseFunction::new(f1.clone(), phi.gen_plus().value() as i64 + 1, phi.gen_minus().value() as i64).unwrap();
        assert!(!check_clifford_action(&f1, &bad, &w).unwrap());
    }

    #[test]
    fn clifford_action_needs_room() {
        let g = ScaMatrix::shear_g(1, fe(1, 2));
        let phi = default_phase(&g).unwrap();
        assert!(check_clifford_action(&g, &phi, &Window::new(0, 1, p(2)).unwrap()).is_err());
        assert!(check_clifford_action(&g, &phi, &Window::new(-1, 2, p(2)).unwrap()).unwrap());
    }
}
