//! Deciding identities: exact reduction, or an adaptive interval ladder.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::BigRational;

use super::ast::{BinOp, Expr};
use super::eval::{eval_exact_scaled, eval_interval, EvalError, ParamBinding};
use super::interval::IntervalError;
use crate::algebra::rational_to_f64;
use crate::CycloElem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        })
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Mode::Exact),
            "numeric" => Ok(Mode::Numeric),
            other => Err(format!(
                "unknown mode `{other}` (expected exact or numeric)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Proved,
    Refuted,
    ConfirmedToPrecision,
    Inconclusive,
}

impl Verdict {
    /// Proved, or confirmed to the requested precision.
    pub fn holds(self) -> bool {
        matches!(self, Verdict::Proved | Verdict::ConfirmedToPrecision)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Proved => "proved",
            Verdict::Refuted => "refuted",
            Verdict::ConfirmedToPrecision => "confirmed-to-precision",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// The nonzero residual `lhs - rhs` behind a refutation.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    /// Exact residual (a rational or a polynomial in `ζ_M`), or an enclosure.
    pub residual: String,
    /// Set when the exact residual is rational.
    pub rational: Option<BigRational>,
    pub approx: f64,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub mode: Mode,
    /// Numeric mode: confirm once the enclosure is narrower than `2^-target_bits`.
    pub target_bits: u32,
    pub start_bits: u32,
    pub max_bits: u32,
    /// Exact mode: evaluate in `multiple` times the minimal conductor.
    pub conductor_multiple: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: Mode::Exact,
            target_bits: 256,
            start_bits: 128,
            max_bits: 4096,
            conductor_multiple: 1,
        }
    }
}

impl VerifyOptions {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn numeric(target_bits: u32) -> Self {
        VerifyOptions {
            mode: Mode::Numeric,
            target_bits,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub mode: Mode,
    pub verdict: Verdict,
    pub conductor: Option<u64>,
    pub witness: Option<Witness>,
    /// Numeric mode: `log2` of the final enclosure width of `lhs - rhs`.
    pub residual_log2: Option<f64>,
    /// Numeric mode: working precision of the last ladder step.
    pub precision_bits: Option<u32>,
    pub elapsed: Duration,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}", self.verdict, self.mode)?;
        if let Some(m) = self.conductor {
            write!(f, ", conductor {m}")?;
        }
        if let Some(p) = self.precision_bits {
            write!(f, ", {p} bits")?;
        }
        if let Some(w) = self.residual_log2 {
            write!(f, ", residual width 2^{w:.1}")?;
        }
        write!(f, ")")?;
        if let Some(w) = &self.witness {
            write!(f, "; residual {} ~ {:e}", w.residual, w.approx)?;
        }
        Ok(())
    }
}

/// Real part of an element, in floating point.
pub fn approx_real(u: &CycloElem) -> f64 {
    let m = u.field().conductor().get() as f64;
    u.coeffs()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| rational_to_f64(c) * (2.0 * std::f64::consts::PI * k as f64 / m).cos())
        .sum()
}

/// Decides `lhs = rhs` at one binding.
pub fn verify(
    lhs: &Expr,
    rhs: &Expr,
    binding: &ParamBinding,
    opts: &VerifyOptions,
) -> Result<VerifyReport, EvalError> {
    let start = Instant::now();
    let diff = Expr::binary(BinOp::Sub, lhs.clone(), rhs.clone());
    match opts.mode {
        Mode::Exact => {
            let r = eval_exact_scaled(&diff, binding, opts.conductor_multiple)?;
            let conductor = Some(r.field().conductor().get());
            let (verdict, witness) = if r.is_zero() {
                (Verdict::Proved, None)
            } else {
                let w = Witness {
                    residual: r.to_string(),
                    rational: r.as_rational(),
                    approx: r
                        .as_rational()
                        .map_or_else(|| approx_real(&r), |q| rational_to_f64(&q)),
                };
                (Verdict::Refuted, Some(w))
            };
            Ok(VerifyReport {
                mode: Mode::Exact,
                verdict,
                conductor,
                witness,
                residual_log2: None,
                precision_bits: None,
                elapsed: start.elapsed(),
            })
        }
        Mode::Numeric => {
            let mut prec = opts.start_bits.max(16);
            let mut last = None;
            loop {
                match eval_interval(&diff, binding, prec) {
                    Ok(iv) => {
                        let report = |verdict, witness| VerifyReport {
                            mode: Mode::Numeric,
                            verdict,
                            conductor: None,
                            witness,
                            residual_log2: Some(iv.width_log2()),
                            precision_bits: Some(prec),
                            elapsed: start.elapsed(),
                        };
                        if !iv.contains_zero() {
                            let w = Witness {
                                residual: iv.to_string(),
                                rational: None,
                                approx: iv.midpoint_f64(),
                            };
                            return Ok(report(Verdict::Refuted, Some(w)));
                        }
                        if iv.width_below_pow2(opts.target_bits) {
                            return Ok(report(Verdict::ConfirmedToPrecision, None));
                        }
                        last = Some(iv.width_log2());
                    }
                    // a divisor enclosure straddling zero may separate at higher precision
                    Err(EvalError::Interval(IntervalError::DivisorContainsZero)) => {}
                    Err(e) => return Err(e),
                }
                if prec >= opts.max_bits {
                    return Ok(VerifyReport {
                        mode: Mode::Numeric,
                        verdict: Verdict::Inconclusive,
                        conductor: None,
                        witness: None,
                        residual_log2: last,
                        precision_bits: Some(prec),
                        elapsed: start.elapsed(),
                    });
                }
                prec = (prec * 2).min(opts.max_bits);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::expr::parse_identity;

    fn run(src: &str, b: &ParamBinding, opts: &VerifyOptions) -> VerifyReport {
        let id = parse_identity(src).unwrap();
        verify(&id.lhs, &id.rhs, b, opts).unwrap()
    }

    #[test]
    fn morrie_proved_and_perturbed_refuted() {
        let none = ParamBinding::new();
        let r = run(
            "cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/8",
            &none,
            &VerifyOptions::exact(),
        );
        assert_eq!(r.verdict, Verdict::Proved);
        assert_eq!(r.conductor, Some(36));
        let r = run(
            "cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/7",
            &none,
            &VerifyOptions::exact(),
        );
        assert_eq!(r.verdict, Verdict::Refuted);
        assert_eq!(r.witness.unwrap().rational, Some(rat(1, 8) - rat(1, 7)));
    }

    #[test]
    fn vanishing_sum_at_n9_j2() {
        let b = ParamBinding::new().with("n", 9).with("j", 2);
        let lhs = "sum(k=0..(n-3)/2, sin((j+1)*(2*k+1)*pi/n)*sin((j-1)*(2*k+1)*pi/n)\
                   /(sin((2*k+1)*pi/n)^2*sin(j*(2*k+1)*pi/n)^2))";
        let r = run(&format!("{lhs} = 0"), &b, &VerifyOptions::exact());
        assert_eq!(r.verdict, Verdict::Proved);
        let r = run("sin(pi/6) = 1/3", &b, &VerifyOptions::exact());
        assert_eq!(r.verdict, Verdict::Refuted);
        assert_eq!(r.witness.as_ref().unwrap().rational, Some(rat(1, 6)));
    }

    #[test]
    fn irrational_witness() {
        let r = run(
            "sin(pi/5) = 0",
            &ParamBinding::new(),
            &VerifyOptions::exact(),
        );
        assert_eq!(r.verdict, Verdict::Refuted);
        let w = r.witness.unwrap();
        assert!(w.rational.is_none());
        assert!((w.approx - (std::f64::consts::PI / 5.0).sin()).abs() < 1e-12);
    }

    #[test]
    fn numeric_ladder() {
        let none = ParamBinding::new();
        let r = run("sqrt(2)*sqrt(8) = 4", &none, &VerifyOptions::numeric(200));
        assert_eq!(r.verdict, Verdict::ConfirmedToPrecision);
        let r = run("sqrt(2) = 7/5", &none, &VerifyOptions::numeric(64));
        assert_eq!(r.verdict, Verdict::Refuted);
        let opts = VerifyOptions {
            max_bits: 128,
            ..VerifyOptions::numeric(4000)
        };
        let r = run("sin(pi/3)^2 = 3/4", &none, &opts);
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }
}
