//! Exact algebra for Clifford quantum cellular automata.
//!
//! A Clifford automaton on a d-dimensional lattice of prime-dimensional
//! cells is described, up to a phase function, by a 2×2 matrix of Laurent
//! polynomials over F_p that preserves the polynomial symplectic form. This
//! crate builds, certifies, composes, factorizes and simulates those
//! matrices, and checks the results against dense Weyl-operator matrices.



pub mod cli;
pub mod cocycle;
pub mod error;
pub mod factor;

pub mod ffield;
pub mod laurent;
pub mod oracle;

pub mod phasespace;
pub mod sca;

pub use error::{Error, Result};
pub use ffield::{FieldElement, Prime};
pub use laurent::{Degree, LatticeVector, LaurentPoly, Palindrome};
pub use phasespace::PhaseVector;
pub use sca::{ScaMatrix, SymplecticCertificate};

/// Dense complex matrix over `f64`, the oracle's default precision.
pub type DenseMatrix64 = oracle::DenseMatrix<f64>;
/// Dense complex matrix over `f32`.
pub type DenseMatrix32 = oracle::DenseMatrix<f32>;
