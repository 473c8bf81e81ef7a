use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::catalog::{CONJ_1, CONJ_2};
use super::{run_case, split_statement, SuiteError};
use crate::algebra::rational_to_f64;
use crate::cyclo::{trig_value, CycloElem, CycloField, PiRational, TrigFn};
use crate::expr::{
    eval_interval, parse_with_params, IntervalReal, Mode, ParamBinding, Verdict, VerifyReport,
    Witness,
};

/// Largest `(n-1)^(2p)` the digit-sum count will scan by default.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Outcome of comparing `S_n((n-1)^(2p))` with `(2/n) Σ tan^(2p)(kπ/n)`.
#[derive(Clone, Debug)]
pub struct ShevelevCase {
    pub n: u64,
    pub p: u32,
    /// `S_n((n-1)^(2p))`, the signed count over multiples of `n`.
    pub count: i64,
    /// `(2/n) Σ_{k=1}^{(n-1)/2} tan^(2p)(kπ/n)`, exact.
    pub tan_sum: BigRational,
    /// `log cot(π/2n) / log(n-1)`.
    pub lambda: f64,
    /// `log(count·n/2) / (2p·log(n-1))`, which tends to `lambda`.
    pub ratio: f64,
    pub conductor: u64,
    pub elapsed: Duration,
}

impl ShevelevCase {
    pub fn holds(&self) -> bool {
        self.tan_sum == BigRational::from_integer(self.count.into())
    }

    pub fn report(&self) -> VerifyReport {
        let diff = &self.tan_sum - BigRational::from_integer(self.count.into());
        let witness = (!diff.is_zero()).then(|| Witness {
            residual: diff.to_string(),
            approx: rational_to_f64(&diff),
            rational: Some(diff),
        });
        VerifyReport {
            mode: Mode::Exact,
            verdict: if self.holds() {
                Verdict::Proved
            } else {
                Verdict::Refuted
            },
            conductor: Some(self.conductor),
            witness,
            residual_log2: None,
            precision_bits: None,
            elapsed: self.elapsed,
        }
    }
}

/// Sum over `0 <= r < limit`, `n | r`, of `(-1)^{s_{n-1}(r)}`. Steps by
/// `n = (n-1) + 1`, i.e. adds `11` in base `n-1`, tracking the digit sum.
fn signed_digit_count(n: u64, limit: u64) -> i64 {
    let base = n - 1;
    let mut digits: Vec<u64> = Vec::new();
    let mut digit_sum = 0u64;
    let mut total = 0i64;
    let mut r = 0u64;
    while r < limit {
        total += if digit_sum.is_multiple_of(2) { 1 } else { -1 };
        for start in [0usize, 1] {
            let mut i = start;
            let mut carry = 1u64;
            while carry > 0 {
                if i == digits.len() {
                    digits.push(0);
                }
                let v = digits[i] + carry;
                if v >= base {
                    digits[i] = v - base;
                    digit_sum = digit_sum + v - base - (v - carry);
                    carry = 1;
                } else {
                    digits[i] = v;
                    digit_sum += carry;
                    carry = 0;
                }
                i += 1;
            }
        }
        r += n;
    }
    total
}

pub fn shevelev_check(n: u64, p: u32, budget: u64) -> Result<ShevelevCase, SuiteError> {
    let start = Instant::now();
    if n < 3 || n.is_multiple_of(2) || p == 0 {
        return Err(SuiteError::Hypothesis {
            id: "shevelev".into(),
            binding: ParamBinding::new().with("n", n as i64).with("p", p as i64),
            hypothesis: "n odd >= 3, p >= 1".into(),
        });
    }
    let size = (n as u128 - 1).pow(2 * p);
    if size > budget as u128 {
        return Err(SuiteError::BudgetExceeded { size, budget });
    }
    let count = signed_digit_count(n, size as u64);

    let conductor = num_integer::lcm(4, 2 * n);
    let field = CycloField::for_trig(conductor).map_err(crate::expr::EvalError::from)?;
    let mut acc = CycloElem::zero(&field);
    for k in 1..=(n - 1) / 2 {
        let t = trig_value(TrigFn::Tan, PiRational::new(k as i64, n as i64), &field)
            .map_err(crate::expr::EvalError::from)?;
        let t2p = (&t * &t)
            .pow(p as i64)
            .map_err(crate::expr::EvalError::from)?;
        acc = &acc + &t2p;
    }
    let sum = acc
        .as_rational()
        .ok_or_else(|| SuiteError::NotRational(acc.to_string()))?;
    let tan_sum = sum * BigRational::new(2.into(), BigInt::from(n));

    let nf = n as f64;
    let log_base = (nf - 1.0).ln();
    let lambda = (1.0 / (std::f64::consts::PI / (2.0 * nf)).tan()).ln() / log_base;
    let ratio = (count as f64 * nf / 2.0).ln() / (2.0 * p as f64 * log_base);
    Ok(ShevelevCase {
        n,
        p,
        count,
        tan_sum,
        lambda,
        ratio,
        conductor,
        elapsed: start.elapsed(),
    })
}

/// Enclosure of `Σ_{m>0, N∤m} cot²(mπ/N)/m²` against its closed form.
#[derive(Clone, Debug)]
pub struct FrankeReport {
    pub modulus: u64,
    /// Terms summed before the tail bound takes over.
    pub terms: u64,
    pub precision_bits: u32,
    /// `(N-1)(N-2)(N²+3N+2)π²/(90N²)`.
    pub closed_form: IntervalReal,
    /// Partial sum widened by the tail bound `cot²(π/N)/T`.
    pub enclosure: IntervalReal,
    pub elapsed: Duration,
}

impl FrankeReport {
    pub fn enclosed(&self) -> bool {
        self.enclosure.lo() <= self.closed_form.lo() && self.closed_form.hi() <= self.enclosure.hi()
    }

    pub fn report(&self) -> VerifyReport {
        let witness = (!self.enclosed()).then(|| Witness {
            residual: format!("{} vs {}", self.enclosure, self.closed_form),
            rational: None,
            approx: self.enclosure.midpoint_f64() - self.closed_form.midpoint_f64(),
        });
        VerifyReport {
            mode: Mode::Numeric,
            verdict: if self.enclosed() {
                Verdict::ConfirmedToPrecision
            } else {
                Verdict::Refuted
            },
            conductor: None,
            witness,
            residual_log2: Some(self.enclosure.width_log2()),
            precision_bits: Some(self.precision_bits),
            elapsed: self.elapsed,
        }
    }
}

pub fn franke_check(modulus: u64, prec: u32) -> Result<FrankeReport, SuiteError> {
    let start = Instant::now();
    if modulus < 3 {
        return Err(SuiteError::Hypothesis {
            id: "franke".into(),
            binding: ParamBinding::new().with("N", modulus as i64),
            hypothesis: "N >= 3".into(),
        });
    }
    if prec < 32 {
        return Err(SuiteError::PrecisionExhausted(prec));
    }
    let big_n = modulus as i64;
    let pi = IntervalReal::pi(prec);
    let cot2 = (1..big_n)
        .map(|r| {
            let theta = PiRational::new(r, big_n);
            let c = IntervalReal::cos_pi_rational(theta, &pi);
            let s = IntervalReal::sin_pi_rational(theta, &pi);
            let t = c.div(&s).map_err(crate::expr::EvalError::from)?;
            Ok(&t * &t)
        })
        .collect::<Result<Vec<_>, SuiteError>>()?;

    let poly = BigRational::new(
        ((big_n - 1) * (big_n - 2) * (big_n * big_n + 3 * big_n + 2)).into(),
        (90 * big_n * big_n).into(),
    );
    let closed_form = &IntervalReal::from_rational(&poly, prec) * &(&pi * &pi);

    // Truncate where the tail is about 2^-10 of the value.
    let max_cot2 = cot2[0].hi().clone();
    let guess = rational_to_f64(&max_cot2) * 1024.0 / closed_form.midpoint_f64();
    let terms = (guess.ceil() as u64).max(64 * modulus).div_ceil(modulus) * modulus;

    let zero = IntervalReal::from_int(0, prec);
    let mut residue = vec![zero.clone(); modulus as usize];
    for m in 1..=terms {
        let r = (m % modulus) as usize;
        if r != 0 {
            let inv = BigRational::new(1.into(), BigInt::from(m) * BigInt::from(m));
            residue[r] = &residue[r] + &IntervalReal::from_rational(&inv, prec);
        }
    }
    let partial = cot2
        .iter()
        .zip(&residue[1..])
        .fold(zero, |acc, (c, h)| &acc + &(c * h));
    let tail = max_cot2 / BigRational::from_integer(terms.into());
    let enclosure = IntervalReal::from_bounds(partial.lo().clone(), partial.hi() + tail, prec);
    Ok(FrankeReport {
        modulus,
        terms,
        precision_bits: prec,
        closed_form,
        enclosure,
        elapsed: start.elapsed(),
    })
}

/// Both closed forms behind the two limit statements, exactly at `k`.
pub fn conjecture_closed_forms(k: u64) -> Result<(VerifyReport, VerifyReport), SuiteError> {
    let b = ParamBinding::new().with("k", k as i64);
    Ok((run_case("conj-1", &b)?, run_case("conj-2", &b)?))
}

/// Enclosures of the two alternating sums at `k`; they approach `-1/2`
/// and `+1/2`.
pub fn conjecture_limits(k: u64, prec: u32) -> Result<(IntervalReal, IntervalReal), SuiteError> {
    let b = ParamBinding::new().with("k", k as i64);
    let lhs = |s: &str| -> Result<IntervalReal, SuiteError> {
        let l = split_statement(s).0;
        Ok(eval_interval(&parse_with_params(l, &["k"])?, &b, prec)?)
    };
    Ok((lhs(CONJ_1)?, lhs(CONJ_2)?))
}

/// Both odd-`n` ratio identities at `n`.
pub fn extra_ident_check(n: u64) -> Result<(VerifyReport, VerifyReport), SuiteError> {
    let b = ParamBinding::new().with("n", n as i64);
    Ok((
        run_case("extra-ident-1", &b)?,
        run_case("extra-ident-2", &b)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: u64, limit: u64) -> i64 {
        (0..limit)
            .step_by(n as usize)
            .map(|mut r| {
                let mut s = 0;
                while r > 0 {
                    s += r % (n - 1);
                    r /= n - 1;
                }
                if s % 2 == 0 {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    #[test]
    fn incremental_count_matches_direct() {
        for (n, lim) in [
            (3, 4),
            (3, 256),
            (5, 4096),
            (7, 1296),
            (9, 4096),
            (11, 10_000),
        ] {
            assert_eq!(signed_digit_count(n, lim), brute(n, lim), "n = {n}");
        }
    }

    #[test]
    fn smallest_shevelev_case() {
        let c = shevelev_check(3, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.count, 2);
        assert!(c.holds());
        assert!(matches!(
            shevelev_check(3, 20, DEFAULT_BUDGET),
            Err(SuiteError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn franke_small_modulus() {
        let r = franke_check(3, 128).unwrap();
        assert!(r.enclosed(), "{:?}", r);
        assert!((r.closed_form.midpoint_f64() - 0.48738).abs() < 1e-4);
    }
}
