//! Exact integers, rationals and dense univariate polynomials.

mod poly;
mod rational;

pub use poly::{ExtGcd, Poly};
pub use rational::{
    binomial, factorial, int, parse_rational, rat, rat_arith, rational_to_f64, ArithOp,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivisor,
    #[error("binomial({m}, {r}) is out of range (need 0 <= r <= m)")]
    BinomialOutOfRange { m: i64, r: i64 },
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
}
