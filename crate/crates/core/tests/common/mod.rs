#![allow(dead_code)]

use cqca::factor::{multiply_word, random_word};
use cqca::{FieldElement, LaurentPoly, PhaseVector, Prime, ScaMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [u64; 3] = [2, 3, 5];

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

pub fn poly(rng: &mut ChaCha8Rng, p: Prime, dim: usize, terms: usize, spread: i64) -> LaurentPoly {
    let raw: Vec<(Vec<i64>, i64)> = (0..terms)
        .map(|_| {
            let x = (0..dim).map(|_| rng.gen_range(-spread..=spread)).collect();
            (x, rng.gen_range(0..p.get()) as i64)
        })
        .collect();
    LaurentPoly::from_terms(p, dim, raw).unwrap()
}

pub fn vector(rng: &mut ChaCha8Rng, p: Prime, dim: usize) -> PhaseVector {
    let n = rng.gen_range(0..=4);
    let m = rng.gen_range(0..=4);
    PhaseVector::new(poly(rng, p, dim, n, 4), poly(rng, p, dim, m, 4)).unwrap()
}

/// Product of a random word of length 1..=8 with shears up to n = 3.
pub fn word_matrix(rng: &mut ChaCha8Rng, p: Prime) -> ScaMatrix {
    let len = rng.gen_range(1..=8);
    multiply_word(&random_word(len, 3, rng.gen(), p))
}

/// Adds a nonzero constant to one coefficient of one entry.
pub fn corrupt(rng: &mut ChaCha8Rng, s: &ScaMatrix) -> ScaMatrix {
    let p = s.modulus();
    let (i, j) = (rng.gen_range(0..2), rng.gen_range(0..2));
    let mut rows = s.entries().clone();
    let x = rng.gen_range(-6..=6i64);
    let c = FieldElement::new(rng.gen_range(1..p.get()) as i64, p);
    rows[i][j] = rows[i][j].add(&LaurentPoly::monomial(&[x], c)).unwrap();
    ScaMatrix::from_rows(rows).unwrap()
}
