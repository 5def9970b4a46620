use std::ops::{Add, Mul, Sub};

use num_traits::{Float, FloatConst};

/// Minimal complex number over a real scalar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex<T> {
    pub re: T,
    pub im: T,
}

impl<T: Float> Complex<T> {
    pub fn new(re: T, im: T) -> Self {
        Complex { re, im }
    }

    pub fn zero() -> Self {
        Complex::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Complex::new(T::one(), T::zero())
    }

    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    pub fn abs(self) -> T {
        self.re.hypot(self.im)
    }
}

impl<T: Float + FloatConst> Complex<T> {
    /// `exp(2πi·k / order)`.
    pub fn root_of_unity(k: u64, order: u64) -> Self {
        let k = k % order;
        let angle = T::TAU() * T::from(k).unwrap() / T::from(order).unwrap();
        Complex::new(angle.cos(), angle.sin())
    }
}

impl<T: Float> Add for Complex<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Complex::new(self.re + o.re, self.im + o.im)
    }
}

impl<T: Float> Sub for Complex<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Complex::new(self.re - o.re, self.im - o.im)
    }
}

impl<T: Float> Mul for Complex<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Complex::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}
