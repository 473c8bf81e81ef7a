//! Exact arithmetic in cyclotomic fields `ℚ(ζ_M)` and the embedding of
//! trigonometric values at rational multiples of π.

mod angle;
mod cyclotomic;
mod field;

pub use angle::{trig_value, PiRational, TrigFn};
pub use cyclotomic::{cyclotomic_polynomial, divisors, totient};
pub use field::{elem_arith, Conductor, CycloElem, CycloField, FieldOp};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("invalid conductor {0} (trig embeddings need a positive multiple of 4)")]
    InvalidConductor(u64),
    #[error("operands live in different fields (conductors {0} and {1}); lift first")]
    MixedConductors(u64, u64),
    #[error("cannot lift from conductor {from} to {to}: {from} does not divide {to}")]
    NonDivisibleConductor { from: u64, to: u64 },
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    #[error("{func} has a pole at {angle}")]
    Pole { func: TrigFn, angle: PiRational },
    #[error("conductor {have} is not a multiple of the required {need}")]
    InsufficientConductor { need: u64, have: u64 },
}
