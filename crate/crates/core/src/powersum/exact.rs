use num_rational::BigRational;

use super::family::{defining_poly, elementary_symmetric, vieta_coefficient, FamilyId};
use super::PowerSumError;
use crate::cyclo::{trig_value, CycloElem, CycloField, TrigFn};

/// `Σ_j s_j^k` for `k = 1..=k_max`, where `s_j` is `sin²θ_j` or `csc²θ_j`,
/// computed term by term in the cyclotomic field.
pub fn family_power_sums_exact(
    family: FamilyId,
    n: u64,
    k_max: u64,
) -> Result<Vec<BigRational>, PowerSumError> {
    if n == 0 {
        return Err(PowerSumError::InvalidN { family, n });
    }
    let count = family.term_count(n);
    let m = (1..=count.max(1))
        .map(|j| family.angle(n, j).min_conductor())
        .fold(4u64, num_integer::lcm);
    let field = CycloField::for_trig(m)?;
    let mut terms = Vec::with_capacity(count as usize);
    for j in 1..=count {
        let s = trig_value(TrigFn::Sin, family.angle(n, j), &field)?;
        let s2 = &s * &s;
        terms.push(if family.is_negative() { s2.inv()? } else { s2 });
    }
    let mut powers = terms.clone();
    let mut out = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        if k > 1 {
            for (p, t) in powers.iter_mut().zip(&terms) {
                *p = &*p * t;
            }
        }
        let total = powers
            .iter()
            .fold(CycloElem::zero(&field), |acc, p| &acc + p);
        let q = total
            .as_rational()
            .ok_or(PowerSumError::NotRational { family, k, n })?;
        out.push(q);
    }
    Ok(out)
}

/// The family's sum at a single `(k, n)`; an empty sum is 0.
pub fn family_sum_exact(family: FamilyId, k: u64, n: u64) -> Result<BigRational, PowerSumError> {
    if k == 0 {
        return Err(PowerSumError::InvalidK(k));
    }
    Ok(family_power_sums_exact(family, n, k)?
        .pop()
        .expect("k >= 1"))
}

/// First disagreement found by [`vieta_crosscheck`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VietaMismatch {
    pub family: FamilyId,
    pub n: u64,
    pub k: u64,
    pub from_poly: BigRational,
    pub from_lemma: BigRational,
}

/// Compares `e_k` read off the Chebyshev-derived polynomial with the
/// closed-form symmetric function, for `k = 0..=k_max`.
pub fn vieta_crosscheck(
    family: FamilyId,
    n: u64,
    k_max: u64,
) -> Result<Result<(), VietaMismatch>, PowerSumError> {
    let p = defining_poly(family, n)?;
    let nq = BigRational::from_integer(n.into());
    for k in 0..=k_max {
        let from_poly = vieta_coefficient(&p, k as usize);
        let from_lemma = elementary_symmetric(family, k).eval(&nq);
        if from_poly != from_lemma {
            return Ok(Err(VietaMismatch {
                family,
                n,
                k,
                from_poly,
                from_lemma,
            }));
        }
    }
    Ok(Ok(()))
}
