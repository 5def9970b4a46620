use thiserror::Error;

/// Errors raised by the algebra layers and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    InvalidPrime(u64),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("lattice dimension must be positive")]
    ZeroDimension,
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a one-dimensional lattice, got d = {0}")]
    NotOneDimensional(usize),
    #[error("polynomial is not a palindrome: {0}")]
    NotPalindrome(String),
    #[error("not symplectic: {0}")]
    NotSymplectic(String),
    #[error("f'h' does not equal 1 - fh")]
    FactorizationMismatch,
    #[error("local generator requires a nonzero constant")]
    ZeroLocalConstant,
    #[error("no phase assignment satisfies the cocycle constraints")]
    NoValidPhase,
    #[error("support of {what} lies outside the window [{lo}, {hi}]")]
    OutsideWindow { what: String, lo: i64, hi: i64 },
    #[error("window too large: {0} exceeds the dense dimension cap")]
    WindowTooLarge(u128),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
