//! Scalar abstraction shared by every module.
//!
//! Algebraic routines that only need a ring (the Clifford product table, the
//! quaternion product) are bounded by [`Ring`], so they also run on exact
//! integer coefficients. Anything involving norms, trigonometry or complex
//! conjugation is bounded by [`Real`], implemented for `f32` and `f64`.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Float, FloatConst, Num, NumCast};

/// Commutative ring with negation; `i64`, `f32` and `f64` all qualify.
pub trait Ring: Copy + Num + Neg<Output = Self> + Debug + Send + Sync + 'static {}

impl<T> Ring for T where T: Copy + Num + Neg<Output = T> + Debug + Send + Sync + 'static {}

/// Floating point scalar: f32 or f64.
pub trait Real: Ring + Float + FloatConst + Display + Default {
    /// Converts an `f64` literal, panicking only if the target cannot represent it.
    fn lit(x: f64) -> Self {
        <Self as NumCast>::from(x).expect("literal representable in scalar type")
    }

    /// Default absolute tolerance for unit-norm and pure-grade checks.
    fn default_tol() -> Self {
        Self::lit(1e-9)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `z` scaled by the real `s`.
pub(crate) fn cscale<T: Real>(z: Complex<T>, s: T) -> Complex<T> {
    Complex::new(z.re * s, z.im * s)
}

pub(crate) fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

pub(crate) fn cone<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

pub(crate) fn cimag<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}
