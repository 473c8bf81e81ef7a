use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;

use super::family::{elementary_symmetric, FamilyId};
use super::PowerSumError;
use crate::UniPoly;

/// Default ceiling on `k` for derivations.
pub const K_MAX_CEILING: u64 = 60;

/// A derived power sum: `Σ f(θ_j)^{2k}` as an exact polynomial in `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumFormula {
    pub family: FamilyId,
    pub k: u64,
    pub poly: UniPoly,
}

impl PowerSumFormula {
    pub fn eval(&self, n: i64) -> BigRational {
        self.poly.eval(&BigRational::from_integer(n.into()))
    }
}

#[derive(Default)]
struct Series {
    e: Vec<UniPoly>,
    p: Vec<UniPoly>,
}

impl Series {
    fn extend_to(&mut self, family: FamilyId, k_max: usize) {
        if self.e.is_empty() {
            self.e.push(UniPoly::one());
            self.p.push(UniPoly::zero());
        }
        while self.e.len() <= k_max {
            let k = self.e.len();
            self.e.push(elementary_symmetric(family, k as u64));
            // p_k = Σ_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
            let mut acc = self.e[k].scale(&BigRational::from_integer(k.into()));
            if k.is_multiple_of(2) {
                acc = -acc;
            }
            for i in 1..k {
                let t = &self.e[i] * &self.p[k - i];
                acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
            }
            self.p.push(acc);
        }
    }
}

/// Memoized Newton recursion, one series per family. Safe to share.
#[derive(Default)]
pub struct PowerSumEngine {
    series: Mutex<HashMap<FamilyId, Series>>,
}

impl PowerSumEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide engine.
    pub fn global() -> &'static PowerSumEngine {
        static ENGINE: OnceLock<PowerSumEngine> = OnceLock::new();
        ENGINE.get_or_init(PowerSumEngine::new)
    }

    /// `p_1 … p_{k_max}` for `family`, respecting [`K_MAX_CEILING`].
    pub fn power_sums(
        &self,
        family: FamilyId,
        k_max: u64,
    ) -> Result<Vec<PowerSumFormula>, PowerSumError> {
        self.power_sums_unbounded(family, k_max, K_MAX_CEILING)
    }

    /// As [`power_sums`](Self::power_sums) with a caller-chosen ceiling.
    pub fn power_sums_unbounded(
        &self,
        family: FamilyId,
        k_max: u64,
        ceiling: u64,
    ) -> Result<Vec<PowerSumFormula>, PowerSumError> {
        if k_max == 0 {
            return Err(PowerSumError::InvalidK(0));
        }
        if k_max > ceiling {
            return Err(PowerSumError::KTooLarge { k: k_max, ceiling });
        }
        let mut map = self.series.lock().expect("engine lock poisoned");
        let s = map.entry(family).or_default();
        s.extend_to(family, k_max as usize);
        Ok((1..=k_max)
            .map(|k| PowerSumFormula {
                family,
                k,
                poly: s.p[k as usize].clone(),
            })
            .collect())
    }

    pub fn power_sum(&self, family: FamilyId, k: u64) -> Result<PowerSumFormula, PowerSumError> {
        Ok(self.power_sums(family, k)?.pop().expect("k >= 1"))
    }
}

/// `p_1 … p_{k_max}` via the global engine.
pub fn newton_power_sums(
    family: FamilyId,
    k_max: u64,
) -> Result<Vec<PowerSumFormula>, PowerSumError> {
    PowerSumEngine::global().power_sums(family, k_max)
}
