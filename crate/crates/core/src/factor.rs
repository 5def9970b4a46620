//! Factorization of one-dimensional symplectic automata into a shift and
//! elementary generators, by Euclidean reduction in the palindrome ring.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{FieldElement, Prime};
use crate::laurent::{palindrome_divmod, Degree, Palindrome};
use crate::sca::ScaMatrix;

/// One elementary automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorLetter {
    /// `u^a` times the identity.
    Shift(i64),
    /// `((1, 0), (c·b_n, 1))`.
    Shear { n: u64, c: FieldElement },
    /// `((0, c), (−c⁻¹, 0))`.
    Local { c: FieldElement },
    /// `((1, c·b_n), (0, 1))`.
    UpperShear { n: u64, c: FieldElement },
}

impl GeneratorLetter {
    pub fn matrix(&self, modulus: Prime) -> Result<ScaMatrix> {
        match *self {
            GeneratorLetter::Shift(a) => Ok(ScaMatrix::shift(&[a], modulus)),
            GeneratorLetter::Shear { n, c } => Ok(ScaMatrix::shear_g(n, c)),
            GeneratorLetter::Local { c } => ScaMatrix::local_f(c),
            GeneratorLetter::UpperShear { n, c } => Ok(ScaMatrix::upper_shear(n, c)),
        }
    }
}

/// An ordered product of generator letters over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    modulus: Prime,
    letters: Vec<GeneratorLetter>,
}

impl GeneratorWord {
    pub fn new(modulus: Prime, letters: Vec<GeneratorLetter>) -> Self {
        GeneratorWord { modulus, letters }
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn letters(&self) -> &[GeneratorLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The translation part; zero when the word carries no shift letter.
    pub fn shift(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                GeneratorLetter::Shift(a) => *a,
                _ => 0,
            })
            .sum()
    }

    /// Serializes as `[{"shift":2},{"g":{"n":1,"c":1}},{"f":{"c":2}},{"upper":{"n":0,"c":1}}]`.
    pub fn to_json(&self) -> String {
        let repr: Vec<LetterRepr> = self.letters.iter().map(LetterRepr::from).collect();
        serde_json::to_string(&repr).expect("plain data")
    }

    pub fn from_json(text: &str, modulus: Prime) -> Result<Self> {
        let repr: Vec<LetterRepr> =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("word JSON: {e}")))?;
        let letters = repr
            .into_iter()
            .map(|l| l.into_letter(modulus))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorWord { modulus, letters })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub(crate) enum LetterRepr {
    Shift(i64),
    G { n: u64, c: i64 },
    F { c: i64 },
    Upper { n: u64, c: i64 },
}

impl From<&GeneratorLetter> for LetterRepr {
    fn from(l: &GeneratorLetter) -> Self {
        match *l {
            GeneratorLetter::Shift(a) => LetterRepr::Shift(a),
            GeneratorLetter::Shear { n, c } => LetterRepr::G { n, c: c.value() as i64 },
            GeneratorLetter::Local { c } => LetterRepr::F { c: c.value() as i64 },
            GeneratorLetter::UpperShear { n, c } => LetterRepr::Upper { n, c: c.value() as i64 },
        }
    }
}

impl LetterRepr {
    fn into_letter(self, p: Prime) -> Result<GeneratorLetter> {
        Ok(match self {
            LetterRepr::Shift(a) => GeneratorLetter::Shift(a),
            LetterRepr::G { n, c } => GeneratorLetter::Shear { n, c: FieldElement::new(c, p) },
            LetterRepr::F { c } => {
                let c = FieldElement::new(c, p);
                if c.is_zero() {
                    return Err(Error::ZeroLocalConstant);
                }
                GeneratorLetter::Local { c }
            }
            LetterRepr::Upper { n, c } => {
                GeneratorLetter::UpperShear { n, c: FieldElement::new(c, p) }
            }
        })
    }
}

/// Ordered product of the letters' matrices; the empty word is the identity.
pub fn multiply_word(word: &GeneratorWord) -> ScaMatrix {
    let mut acc = ScaMatrix::identity(word.modulus, 1);
    for letter in &word.letters {
        let m = letter.matrix(word.modulus).expect("letters are valid by construction");
        acc = acc.compose(&m).expect("same ring");
    }
    acc
}

/// Progress report from the Euclidean reduction, one per loop pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub iteration: usize,
    pub swapped: bool,
    /// Degree of the lower-left entry after a division step; strictly
    /// decreasing across division steps.
    pub lower_left_degree: Degree,
}

pub fn factorize(s: &ScaMatrix) -> Result<GeneratorWord> {
    factorize_traced(s, |_| {})
}

/// Like [`factorize`], reporting every reduction pass to `hook`.
///
/// The reduction multiplies the remaining matrix from the left by generator
/// inverses and appends the generators, so `word · remaining = s` holds after
/// every step.
pub fn factorize_traced<F>(s: &ScaMatrix, mut hook: F) -> Result<GeneratorWord>
where
    F: FnMut(&ReductionStep),
{
    if s.dim() != 1 {
        return Err(Error::NotOneDimensional(s.dim()));
    }
    let p = s.modulus();
    let cert = s.classify()?;
    let mut letters = Vec::new();
    if cert.shift[0] != 0 {
        letters.push(GeneratorLetter::Shift(cert.shift[0]));
    }

    let pal = |i: usize, j: usize| Palindrome::new(cert.core.entry(i, j).clone());
    let (mut a, mut b, mut c, mut d) = (pal(0, 0)?, pal(0, 1)?, pal(1, 0)?, pal(1, 1)?);
    let one = FieldElement::one(p);
    let mut iteration = 0;

    while !c.is_zero() {
        iteration += 1;
        if a.is_zero() || c.degree()? < a.degree()? {
            // f_1⁻¹ · ((a, b), (c, d)) = ((−c, −d), (a, b))
            letters.push(GeneratorLetter::Local { c: one });
            let (na, nb) = (c.scale(one.neg())?, d.scale(one.neg())?);
            c = a;
            d = b;
            a = na;
            b = nb;
            hook(&ReductionStep {
                iteration,
                swapped: true,
                lower_left_degree: c.degree()?,
            });
            continue;
        }
        let (q, r) = palindrome_divmod(&c, &a)?;
        for (n, k) in q.symmetric_coefficients()? {
            letters.push(GeneratorLetter::Shear { n, c: k });
        }
        d = d.sub(&q.mul(&b)?)?;
        c = r;
        hook(&ReductionStep {
            iteration,
            swapped: false,
            lower_left_degree: c.degree()?,
        });
    }

    // ((c0, b), (0, c0⁻¹)) = diag(c0, c0⁻¹) · ((1, c0⁻¹ b), (0, 1))
    let c0 = match a.as_poly().as_constant() {
        Some(c0) if !c0.is_zero() => c0,
        _ => {
            return Err(Error::NotSymplectic(format!(
                "reduced upper-left entry {a} is not a unit"
            )))
        }
    };
    if c0 != one {
        letters.push(GeneratorLetter::Local { c: c0 });
        letters.push(GeneratorLetter::Local { c: one.neg() });
    }
    let upper = b.scale(c0.inv()?)?;
    for (n, k) in upper.symmetric_coefficients()? {
        letters.push(GeneratorLetter::UpperShear { n, c: k });
    }
    debug_assert_eq!(d.as_poly().as_constant(), Some(c0.inv()?));

    let word = GeneratorWord { modulus: p, letters };
    debug_assert_eq!(&multiply_word(&word), s);
    Ok(word)
}

/// Deterministic pseudo-random word of exactly `length` letters. A shift,
/// when drawn, is always the first letter.
pub fn random_word(length: usize, max_n: u64, seed: u64, modulus: Prime) -> GeneratorWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = modulus.get();
    let nonzero = |rng: &mut ChaCha8Rng| FieldElement::new(rng.gen_range(1..p) as i64, modulus);
    let mut letters = Vec::with_capacity(length);
    for i in 0..length {
        let kind = if i == 0 { rng.gen_range(0..4) } else { rng.gen_range(1..4) };
        let letter = match kind {
            0 => {
                let a = rng.gen_range(1..=3i64);
                GeneratorLetter::Shift(if rng.gen() { a } else { -a })
            }
            1 => GeneratorLetter::Shear {
                n: rng.gen_range(0..=max_n),
                c: nonzero(&mut rng),
            },
            2 => GeneratorLetter::Local { c: nonzero(&mut rng) },
            _ => GeneratorLetter::UpperShear {
                n: rng.gen_range(0..=max_n),
                c: nonzero(&mut rng),
            },
        };
        letters.push(letter);
    }
    GeneratorWord { modulus, letters }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn fe(v: i64, n: u64) -> FieldElement {
        FieldElement::new(v, p(n))
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            multiply_word(&GeneratorWord::new(p(3), vec![])),
            ScaMatrix::identity(p(3), 1)
        );
        assert_eq!(
            multiply_word(&GeneratorWord::new(p(3), vec![GeneratorLetter::Shift(1)])),
            ScaMatrix::shift(&[1], p(3))
        );
        // f_1 · g_1 = ((0,1),(1,0)) · ((1,0),(b,1)) = ((b,1),(1,0)) in char 2
        let w = GeneratorWord::new(
            p(2),
            vec![
                GeneratorLetter::Local { c: fe(1, 2) },
                GeneratorLetter::Shear { n: 1, c: fe(1, 2) },
            ],
        );
        let b1 = LaurentPoly::from_1d(p(2), &[(1, 1), (-1, 1)]);
        let expected = ScaMatrix::new(
            b1,
            LaurentPoly::one(p(2), 1),
            LaurentPoly::one(p(2), 1),
            LaurentPoly::zero(p(2), 1),
        )
        .unwrap();
        assert_eq!(multiply_word(&w), expected);
    }

    #[test]
    fn factorize_generators() {
        for n in 1..5 {
            let w = factorize(&ScaMatrix::shear_g(n, fe(1, 3))).unwrap();
            assert_eq!(w.letters(), &[GeneratorLetter::Shear { n, c: fe(1, 3) }]);
        }
        let w = factorize(&ScaMatrix::shift(&[3], p(5))).unwrap();
        assert_eq!(w.letters(), &[GeneratorLetter::Shift(3)]);
        assert!(factorize(&ScaMatrix::identity(p(5), 1)).unwrap().is_empty());
    }

    #[test]
    fn factorize_rejects() {
        let s = ScaMatrix::new(
            LaurentPoly::from_1d(p(3), &[(1, 1)]),
            LaurentPoly::zero(p(3), 1),
            LaurentPoly::zero(p(3), 1),
            LaurentPoly::from_1d(p(3), &[(-1, 1)]),
        )
        .unwrap();
        assert!(matches!(factorize(&s), Err(Error::NotSymplectic(_))));
        let s2 = ScaMatrix::identity(p(3), 2);
        assert_eq!(factorize(&s2), Err(Error::NotOneDimensional(2)));
    }

    #[test]
    fn roundtrip_random_words() {
        for prime in [2, 3, 5] {
            for seed in 0..200 {
                let word = random_word((seed % 9) as usize, 3, seed, p(prime));
                let s = multiply_word(&word);
                let f = factorize(&s).unwrap();
                assert_eq!(multiply_word(&f), s, "p={prime} seed={seed}");
                assert_eq!(f.shift(), s.classify().unwrap().shift[0]);
            }
        }
    }

    #[test]
    fn degree_strictly_decreases() {
        for seed in 0..100 {
            let s = multiply_word(&random_word(8, 3, seed, p(3)));
            let max_deg = s.max_degree().unwrap();
            let mut last = Degree::Finite(u64::MAX);
            let mut passes = 0;
            factorize_traced(&s, |step| {
                passes += 1;
                if !step.swapped {
                    assert!(step.lower_left_degree < last);
                    last = step.lower_left_degree;
                }
            })
            .unwrap();
            assert!(passes as u64 <= 2 * max_deg + 2, "seed {seed}: {passes} passes, degree {max_deg}");
        }
    }

    #[test]
    fn random_word_contract() {
        assert!(random_word(0, 3, 7, p(3)).is_empty());
        assert_eq!(random_word(6, 3, 42, p(5)), random_word(6, 3, 42, p(5)));
        for seed in 0..50 {
            let w = random_word(8, 3, seed, p(3));
            assert_eq!(w.len(), 8);
            assert!(multiply_word(&w).is_symplectic());
            assert!(w.letters()[1..].iter().all(|l| !matches!(l, GeneratorLetter::Shift(_))));
        }
    }

    #[test]
    fn word_json() {
        let w = GeneratorWord::new(
            p(3),
            vec![
                GeneratorLetter::Shift(2),
                GeneratorLetter::Shear { n: 1, c: fe(1, 3) },
                GeneratorLetter::Local { c: fe(2, 3) },
                GeneratorLetter::UpperShear { n: 0, c: fe(1, 3) },
            ],
        );
        let text = w.to_json();
        assert_eq!(
            text,
            r#"[{"shift":2},{"g":{"n":1,"c":1}},{"f":{"c":2}},{"upper":{"n":0,"c":1}}]"#
        );
        assert_eq!(GeneratorWord::from_json(&text, p(3)).unwrap(), w);
        assert!(GeneratorWord::from_json(r#"[{"f":{"c":3}}]"#, p(3)).is_err());
    }
}
