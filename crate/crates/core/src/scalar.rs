//! Scalar abstraction shared by the polynomial layer.
//!
//! Exact work runs over [`BigRational`](crate::BigRational); the same code
//! paths accept `f64`/`f32` for quick floating-point cross-checks.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// A field-like scalar: ring operations plus division by nonzero elements.
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> {
    /// Embeds a machine integer.
    fn from_i64(v: i64) -> Self;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
}

impl Scalar for num_rational::BigRational {
    fn from_i64(v: i64) -> Self {
        num_rational::BigRational::from_integer(v.into())
    }
}

impl Scalar for num_rational::Rational64 {
    fn from_i64(v: i64) -> Self {
        num_rational::Rational64::from_integer(v)
    }
}
