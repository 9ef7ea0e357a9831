//! Scalar abstraction: every numerical routine in this crate is generic over
//! a floating-point type implementing [`Real`].

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps};

/// Floating-point scalar usable throughout the crate: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + NumAssignOps + Sum<Self> + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + NumAssignOps + Sum<Self> + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal must convert into the scalar type")
}

/// Converts a `usize` (dimension, count) into the working scalar type.
#[inline]
pub fn lit_usize<T: Real>(x: usize) -> T {
    T::from_usize(x).expect("usize literal must convert into the scalar type")
}

/// Two, the most common non-trivial constant in the frame algebra.
#[inline]
pub fn two<T: Real>() -> T {
    T::one() + T::one()
}

/// One half.
#[inline]
pub fn half<T: Real>() -> T {
    T::one() / two()
}
