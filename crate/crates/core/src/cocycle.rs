//! Phase functions accompanying a symplectic matrix.
//!
//! A phase function assigns to each phase-space vector a root of unity so
//! that `φ(ξ+η) = ε^{β(ξ,η) − β(sξ,sη)} φ(ξ) φ(η)`. It is stored as its two
//! values on the single-site generators `e₊(0)`, `e₋(0)`; values elsewhere
//! follow from translation invariance and the cocycle rule, folded over the
//! generator decomposition in lexicographic site order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ffield::{FieldElement, Prime};
use crate::laurent::LaurentPoly;
use crate::phasespace::{beta, translate, PhaseVector};
use crate::sca::ScaMatrix;

/// Order of the phase group: 4 for qubits, `p` for odd primes.
pub fn phase_order(p: Prime) -> u64 {
    if p.get() == 2 {
        4
    } else {
        p.get()
    }
}

/// The phase `ζ^value` with `ζ = exp(2πi / order)`; `ε_p = ζ^{order/p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhaseExponent {
    value: u64,
    order: u64,
}

impl PhaseExponent {
    pub fn new(value: i64, order: u64) -> Self {
        PhaseExponent {
            value: value.rem_euclid(order as i64) as u64,
            order,
        }
    }

    pub fn zero(order: u64) -> Self {
        PhaseExponent { value: 0, order }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Product of phases.
    pub fn combine(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        PhaseExponent {
            value: (self.value + other.value) % self.order,
            order: self.order,
        }
    }

    /// `ε_p^k` expressed in this group.
    pub fn from_epsilon_power(k: FieldElement, order: u64) -> Self {
        let step = order / k.modulus().get();
        PhaseExponent::new((k.value() * step) as i64, order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseFunction {
    automaton: ScaMatrix,
    gen_plus: PhaseExponent,
    gen_minus: PhaseExponent,
    // images s·e₊(0), s·e₋(0) and their self-corrections c(e, e)
    images: [PhaseVector; 2],
    self_corrections: [FieldElement; 2],
}

/// `β(ξ, η) − β(sξ, sη)` given the images.
fn correction(
    xi: &PhaseVector,
    eta: &PhaseVector,
    s_xi: &PhaseVector,
    s_eta: &PhaseVector,
) -> Result<FieldElement> {
    beta(xi, eta)?.sub(&beta(s_xi, s_eta)?)
}

impl PhaseFunction {
    /// Wraps generator values; the automaton must pass `is_symplectic`.
    pub fn new(automaton: ScaMatrix, gen_plus: i64, gen_minus: i64) -> Result<Self> {
        if !automaton.is_symplectic() {
            return Err(Error::NotSymplectic(automaton.to_string()));
        }
        let p = automaton.modulus();
        let order = phase_order(p);
        let origin = vec![0; automaton.dim()];
        let gens = [PhaseVector::e_plus(&origin, p), PhaseVector::e_minus(&origin, p)];
        let images = [automaton.apply(&gens[0])?, automaton.apply(&gens[1])?];
        let self_corrections = [
            correction(&gens[0], &gens[0], &images[0], &images[0])?,
            correction(&gens[1], &gens[1], &images[1], &images[1])?,
        ];
        Ok(PhaseFunction {
            automaton,
            gen_plus: PhaseExponent::new(gen_plus, order),
            gen_minus: PhaseExponent::new(gen_minus, order),
            images,
            self_corrections,
        })
    }

    pub fn automaton(&self) -> &ScaMatrix {
        &self.automaton
    }

    pub fn gen_plus(&self) -> PhaseExponent {
        self.gen_plus
    }

    pub fn gen_minus(&self) -> PhaseExponent {
        self.gen_minus
    }

    pub fn order(&self) -> u64 {
        self.gen_plus.order
    }

    /// `φ(a·e)` for a single-site generator `e`, folded one copy at a time.
    fn generator_multiple(&self, slot: usize, a: FieldElement) -> Result<PhaseExponent> {
        let order = self.order();
        let gen = [self.gen_plus, self.gen_minus][slot];
        let self_corr = self.self_corrections[slot];
        let mut phase = PhaseExponent::zero(order);
        for k in 0..a.value() {
            // φ((k+1)e) = ε^{k·c(e,e)} φ(ke) φ(e)
            let k = FieldElement::new(k as i64, a.modulus());
            let corr = PhaseExponent::from_epsilon_power(k.mul(&self_corr)?, order);
            phase = phase.combine(&gen).combine(&corr);
        }
        Ok(phase)
    }

    pub fn evaluate(&self, xi: &PhaseVector) -> Result<PhaseExponent> {
        let p = self.automaton.modulus();
        let d = self.automaton.dim();
        if xi.modulus() != p {
            return Err(Error::ModulusMismatch {
                left: p.get(),
                right: xi.modulus().get(),
            });
        }
        if xi.dim() != d {
            return Err(Error::DimensionMismatch {
                left: d,
                right: xi.dim(),
            });
        }
        let order = self.order();
        let mut acc = PhaseVector::zero(p, d);
        let mut acc_image = PhaseVector::zero(p, d);
        let mut phase = PhaseExponent::zero(order);
        for site in xi.support() {
            let parts = [
                (PhaseVector::e_plus(&site, p), xi.plus().coeff(&site)),
                (PhaseVector::e_minus(&site, p), xi.minus().coeff(&site)),
            ];
            for (slot, (e, a)) in parts.into_iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let piece = e.scale(a)?;
                // translation covariance: s·(a e(x)) = a·u^x·(s e(0))
                let piece_image = translate(&self.images[slot], &site)?.scale(a)?;
                let corr = correction(&acc, &piece, &acc_image, &piece_image)?;
                phase = phase
                    .combine(&self.generator_multiple(slot, a)?)
                    .combine(&PhaseExponent::from_epsilon_power(corr, order));
                acc = acc.add(&piece)?;
                acc_image = acc_image.add(&piece_image)?;
            }
        }
        debug_assert_eq!(&acc, xi);
        Ok(phase)
    }

    /// Checks the cocycle identity on all pairs supported in the box
    /// `[−radius, radius]^d` (exhaustively when the box holds at most 1024
    /// vectors, otherwise on 10⁴ pseudo-random pairs) plus translation
    /// invariance on sampled vectors.
    pub fn validate_cocycle(&self, radius: u64) -> bool {
        self.validate_cocycle_seeded(radius, 0x5eed)
    }

    pub fn validate_cocycle_seeded(&self, radius: u64, seed: u64) -> bool {
        self.check_cocycle(radius, seed).unwrap_or(false)
    }

    fn check_cocycle(&self, radius: u64, seed: u64) -> Result<bool> {
        let p = self.automaton.modulus();
        let d = self.automaton.dim();
        let sites = box_sites(d, radius as i64);
        let slots = 2 * sites.len() as u32;
        let count = (p.get() as u128).checked_pow(slots);
        let ok = match count {
            Some(n) if n <= 1024 => self.cocycle_exhaustive(&sites)?,
            _ => self.cocycle_sampled(&sites, seed)?,
        };
        Ok(ok && self.translation_invariant(&sites, seed)?)
    }

    fn cocycle_exhaustive(&self, sites: &[Vec<i64>]) -> Result<bool> {
        let p = self.automaton.modulus();
        let pv = p.get();
        let slots = 2 * sites.len();
        let count = pv.pow(slots as u32) as usize;
        let digits = |mut idx: usize| -> Vec<u64> {
            (0..slots)
                .map(|_| {
                    let v = (idx as u64) % pv;
                    idx /= pv as usize;
                    v
                })
                .collect()
        };
        let index = |ds: &[u64]| -> usize {
            ds.iter().rev().fold(0usize, |acc, &v| acc * pv as usize + v as usize)
        };

        // Dense F_p tables of every vector and its image over a common window.
        let img_radius = sites
            .iter()
            .flat_map(|x| x.iter().map(|e| e.unsigned_abs()))
            .max()
            .unwrap_or(0)
            + self.automaton.radius();
        let img_sites = box_sites(self.automaton.dim(), img_radius as i64);
        let dense = |v: &PhaseVector, on: &[Vec<i64>]| -> (Vec<u64>, Vec<u64>) {
            (
                on.iter().map(|x| v.plus().raw_coeff(x)).collect(),
                on.iter().map(|x| v.minus().raw_coeff(x)).collect(),
            )
        };
        let mut table = Vec::with_capacity(count);
        for idx in 0..count {
            let ds = digits(idx);
            let v = vector_from_digits(sites, &ds, p)?;
            let img = self.automaton.apply(&v)?;
            table.push((dense(&v, sites), dense(&img, &img_sites), self.evaluate(&v)?));
        }
        let dot = |a: &[u64], b: &[u64]| a.iter().zip(b).fold(0u64, |s, (x, y)| (s + x * y) % pv);
        let order = self.order();
        for i in 0..count {
            let di = digits(i);
            let (ref vi, ref ii, phi_i) = table[i];
            for j in 0..count {
                let dj = digits(j);
                let sum: Vec<u64> = di.iter().zip(&dj).map(|(a, b)| (a + b) % pv).collect();
                let (ref vj, ref ij, phi_j) = table[j];
                let phi_sum = table[index(&sum)].2;
                let corr = (dot(&vi.0, &vj.1) + pv - dot(&ii.0, &ij.1)) % pv;
                let rhs = phi_i
                    .combine(&phi_j)
                    .combine(&PhaseExponent::from_epsilon_power(FieldElement::new(corr as i64, p), order));
                if rhs != phi_sum {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn cocycle_sampled(&self, sites: &[Vec<i64>], seed: u64) -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = self.order();
        for _ in 0..10_000 {
            let xi = random_vector(sites, self.automaton.modulus(), &mut rng)?;
            let eta = random_vector(sites, self.automaton.modulus(), &mut rng)?;
            let lhs = self.evaluate(&xi.add(&eta)?)?;
            let corr = correction(&xi, &eta, &self.automaton.apply(&xi)?, &self.automaton.apply(&eta)?)?;
            let rhs = self
                .evaluate(&xi)?
                .combine(&self.evaluate(&eta)?)
                .combine(&PhaseExponent::from_epsilon_power(corr, order));
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn translation_invariant(&self, sites: &[Vec<i64>], seed: u64) -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7a7a);
        let d = self.automaton.dim();
        for _ in 0..200 {
            let xi = random_vector(sites, self.automaton.modulus(), &mut rng)?;
            let x: Vec<i64> = (0..d).map(|_| rng.gen_range(-5..=5)).collect();
            if self.evaluate(&translate(&xi, &x)?)? != self.evaluate(&xi)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Lexicographically ordered sites of the box `[−r, r]^d`.
pub(crate) fn box_sites(d: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-r..=r).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// Digits are laid out as `[plus(site 0), minus(site 0), plus(site 1), ...]`.
pub(crate) fn vector_from_digits(sites: &[Vec<i64>], digits: &[u64], p: Prime) -> Result<PhaseVector> {
    let d = sites.first().map_or(1, |x| x.len());
    let plus = sites.iter().zip(digits.iter().step_by(2)).map(|(x, &v)| (x.clone(), v as i64));
    let minus = sites
        .iter()
        .zip(digits.iter().skip(1).step_by(2))
        .map(|(x, &v)| (x.clone(), v as i64));
    PhaseVector::new(
        LaurentPoly::from_terms(p, d, plus)?,
        LaurentPoly::from_terms(p, d, minus)?,
    )
}

pub(crate) fn random_vector<R: Rng>(sites: &[Vec<i64>], p: Prime, rng: &mut R) -> Result<PhaseVector> {
    let digits: Vec<u64> = (0..2 * sites.len()).map(|_| rng.gen_range(0..p.get())).collect();
    vector_from_digits(sites, &digits, p)
}

/// Least generator values satisfying the order condition
/// `φ(p·e) = 1`, i.e. `p·g + κ·c(e,e) ≡ 0` with `κ = p(p−1)/2`.
pub fn default_phase(s: &ScaMatrix) -> Result<PhaseFunction> {
    s.classify()?;
    let p = s.modulus();
    let d = s.dim();
    let order = phase_order(p);
    let origin = vec![0; d];
    let mut gens = [0i64; 2];
    for (slot, e) in [PhaseVector::e_plus(&origin, p), PhaseVector::e_minus(&origin, p)]
        .iter()
        .enumerate()
    {
        let s_e = s.apply(e)?;
        let c_ee = correction(e, e, &s_e, &s_e)?;
        let kappa = p.get() * (p.get() - 1) / 2;
        let twist = PhaseExponent::from_epsilon_power(c_ee, order).value() * kappa;
        gens[slot] = (0..order)
            .find(|g| (p.get() * g + twist).is_multiple_of(order))
            .ok_or(Error::NoValidPhase)? as i64;
    }
    PhaseFunction::new(s.clone(), gens[0], gens[1])
}

/// Phase function of `s ∘ t` built from those of `s` and `t`:
/// `φ(ξ) = φ_t(ξ) · φ_s(tξ)` on the generators.
pub fn compose_phase(phi_s: &PhaseFunction, phi_t: &PhaseFunction) -> Result<PhaseFunction> {
    let s = phi_s.automaton();
    let t = phi_t.automaton();
    let st = s.compose(t)?;
    let origin = vec![0; st.dim()];
    let p = st.modulus();
    let mut gens = [0i64; 2];
    for (slot, e) in [PhaseVector::e_plus(&origin, p), PhaseVector::e_minus(&origin, p)]
        .iter()
        .enumerate()
    {
        let v = phi_t.evaluate(e)?.combine(&phi_s.evaluate(&t.apply(e)?)?);
        gens[slot] = v.value() as i64;
    }
    PhaseFunction::new(st, gens[0], gens[1])
}
