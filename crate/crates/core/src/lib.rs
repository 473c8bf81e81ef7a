//! Exact verification and closed-form derivation for finite trigonometric
//! sums at rational multiples of π.
//!
//! Trig values at `aπ/b` live in the cyclotomic field `ℚ(ζ_M)`, so identities
//! between them can be decided exactly by reduction modulo `Φ_M`. On top of
//! that substrate sit an identity language ([`expr`]), the power-sum
//! derivation engine for the eight `T/U` families ([`powersum`]) and a
//! parameterized regression catalog of classical identities ([`suite`]).

pub mod algebra;
pub mod cyclo;
pub mod expr;
pub mod powersum;
pub mod scalar;
pub mod suite;

pub use num_bigint::BigInt as BigInteger;
pub use num_rational::BigRational;

pub use algebra::{AlgebraError, Poly};
pub use cyclo::{CycloElem, CycloError, CycloField, PiRational, TrigFn};
pub use scalar::Scalar;

/// Exact polynomials over ℚ; the workhorse of every module.
pub type UniPoly = Poly<BigRational>;
/// Double-precision polynomials for floating-point cross-checks.
pub type PolyF64 = Poly<f64>;
/// Single-precision polynomials.
pub type PolyF32 = Poly<f32>;
