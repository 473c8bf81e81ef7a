//! Power sums of `sin²` and `csc²` over the eight classical angle families.
//!
//! The elementary symmetric functions of each family's root set are known
//! in closed form as polynomials in `n`; Newton's identities then turn them
//! into the power sums `p_k`, again polynomials in `n`. Every result can be
//! checked against a term-by-term cyclotomic evaluation at concrete `n`.

mod chebyshev;
mod display;
mod exact;
mod family;
mod newton;

pub use chebyshev::{chebyshev, chebyshev_t_explicit, ChebyshevGen, ChebyshevKind};
pub use display::{factor_linear, factored_display, Factored};
pub use exact::{family_power_sums_exact, family_sum_exact, vieta_crosscheck, VietaMismatch};
pub use family::{
    closed_form_sin, defining_poly, elementary_symmetric, vieta_coefficient, FamilyId,
};
pub use newton::{newton_power_sums, PowerSumEngine, PowerSumFormula, K_MAX_CEILING};

use thiserror::Error;

use crate::cyclo::CycloError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PowerSumError {
    #[error("unknown family `{0}` (expected one of Top, Ton, Tep, Ten, Uop, Uon, Uep, Uen)")]
    UnknownFamily(String),
    #[error("family {family} needs n >= 1, got {n}")]
    InvalidN { family: FamilyId, n: u64 },
    #[error("k must be at least 1, got {0}")]
    InvalidK(u64),
    #[error("k = {k} exceeds the ceiling {ceiling}")]
    KTooLarge { k: u64, ceiling: u64 },
    #[error("{0} is a cosecant family; closed forms exist only for sine powers")]
    NotSineFamily(FamilyId),
    #[error("{family} sum at k = {k}, n = {n} did not reduce to a rational")]
    NotRational { family: FamilyId, k: u64, n: u64 },
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}
