//! Exact (cyclotomic) and rigorous interval evaluation of expressions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use super::ast::{BinOp, Expr, ExprKind, Indexed};
use super::interval::{IntervalError, IntervalReal};
use crate::cyclo::{trig_value, CycloElem, CycloError, CycloField, PiRational, TrigFn};

/// Longest range a single sum or product may iterate over.
pub const MAX_RANGE: i64 = 1 << 22;
/// Largest conductor the exact evaluator will build.
pub const MAX_CONDUCTOR: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unbound parameter `{0}`")]
    Unbound(String),
    #[error("angle `{0}` is not a rational multiple of pi")]
    NotPiRational(String),
    #[error("`{0}` must evaluate to an integer")]
    NotInteger(String),
    #[error("bare `pi` in `{0}` is transcendental; use numeric mode")]
    BarePi(String),
    #[error("`sqrt` is only supported in numeric mode")]
    SqrtInExact,
    #[error("pole at `{subterm}`: {detail}")]
    Pole { subterm: String, detail: String },
    #[error("range of `{subterm}` has {len} terms (limit {MAX_RANGE})")]
    RangeTooLarge { subterm: String, len: i64 },
    #[error("value of `{0}` overflows a machine integer")]
    Overflow(String),
    #[error("conductor {0} exceeds the limit {MAX_CONDUCTOR}")]
    ConductorTooLarge(u64),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

/// Integer values for the free parameters of an expression.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamBinding(BTreeMap<String, i64>);

impl ParamBinding {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, v: i64) -> Self {
        self.0.insert(name.to_string(), v);
        self
    }

    pub fn set(&mut self, name: &str, v: i64) {
        self.0.insert(name.to_string(), v);
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<'a> FromIterator<(&'a str, i64)> for ParamBinding {
    fn from_iter<I: IntoIterator<Item = (&'a str, i64)>>(iter: I) -> Self {
        ParamBinding(iter.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }
}

impl fmt::Display for ParamBinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Parameters plus the stack of live index variables.
struct Env<'b> {
    params: &'b ParamBinding,
    locals: Vec<(String, i64)>,
}

impl Env<'_> {
    fn lookup(&self, name: &str) -> Result<i64, EvalError> {
        self.locals
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| *v)
            .or_else(|| self.params.get(name))
            .ok_or_else(|| EvalError::Unbound(name.to_string()))
    }
}

/// `q0 + q1·π`, the shape of every angle and integer subexpression.
#[derive(Clone, Debug)]
struct Affine {
    q0: BigRational,
    q1: BigRational,
}

impl Affine {
    fn rational(q: BigRational) -> Self {
        Affine {
            q0: q,
            q1: BigRational::zero(),
        }
    }
}

fn affine(e: &Expr, env: &Env) -> Result<Affine, EvalError> {
    let not_affine = || EvalError::NotPiRational(e.to_string());
    Ok(match &e.kind {
        ExprKind::Num(q) => Affine::rational(q.clone()),
        ExprKind::Var(v) => Affine::rational(BigRational::from_integer(env.lookup(v)?.into())),
        ExprKind::Pi => Affine {
            q0: BigRational::zero(),
            q1: BigRational::one(),
        },
        ExprKind::Neg(a) => {
            let a = affine(a, env)?;
            Affine {
                q0: -a.q0,
                q1: -a.q1,
            }
        }
        ExprKind::Binary(op, l, r) => {
            let (a, b) = (affine(l, env)?, affine(r, env)?);
            match op {
                BinOp::Add => Affine {
                    q0: a.q0 + b.q0,
                    q1: a.q1 + b.q1,
                },
                BinOp::Sub => Affine {
                    q0: a.q0 - b.q0,
                    q1: a.q1 - b.q1,
                },
                BinOp::Mul if b.q1.is_zero() => Affine {
                    q0: a.q0 * &b.q0,
                    q1: a.q1 * &b.q0,
                },
                BinOp::Mul if a.q1.is_zero() => Affine {
                    q0: b.q0 * &a.q0,
                    q1: b.q1 * &a.q0,
                },
                BinOp::Div if b.q1.is_zero() => {
                    if b.q0.is_zero() {
                        return Err(EvalError::Pole {
                            subterm: e.to_string(),
                            detail: format!("division by zero value `{r}`"),
                        });
                    }
                    Affine {
                        q0: a.q0 / &b.q0,
                        q1: a.q1 / &b.q0,
                    }
                }
                _ => return Err(not_affine()),
            }
        }
        ExprKind::Pow(b, x) => {
            let x = integer(x, env)?;
            let b = affine(b, env)?;
            if !b.q1.is_zero() {
                return Err(not_affine());
            }
            if b.q0.is_zero() && x < 0 {
                return Err(EvalError::Pole {
                    subterm: e.to_string(),
                    detail: "zero raised to a negative power".into(),
                });
            }
            let x: i32 = x
                .try_into()
                .map_err(|_| EvalError::Overflow(e.to_string()))?;
            Affine::rational(num_traits::Pow::pow(&b.q0, x))
        }
        _ => return Err(not_affine()),
    })
}

/// Evaluates an integer-valued subexpression such as a bound or exponent.
fn integer(e: &Expr, env: &Env) -> Result<i64, EvalError> {
    let a = affine(e, env).map_err(|err| match err {
        EvalError::NotPiRational(_) => EvalError::NotInteger(e.to_string()),
        other => other,
    })?;
    if !a.q1.is_zero() || !a.q0.is_integer() {
        return Err(EvalError::NotInteger(e.to_string()));
    }
    a.q0.to_integer()
        .to_i64()
        .ok_or_else(|| EvalError::Overflow(e.to_string()))
}

fn angle(arg: &Expr, env: &Env) -> Result<PiRational, EvalError> {
    let a = affine(arg, env)?;
    if !a.q0.is_zero() {
        return Err(EvalError::NotPiRational(arg.to_string()));
    }
    let num = a.q1.numer().to_i64();
    let den = a.q1.denom().to_i64();
    match (num, den) {
        (Some(n), Some(d)) if n.checked_mul(4).is_some() && d < i64::MAX / 4 => {
            Ok(PiRational::new(n, d).normalized())
        }
        _ => Err(EvalError::Overflow(arg.to_string())),
    }
}

fn range(e: &Expr, lo: &Expr, hi: &Expr, env: &Env) -> Result<(i64, i64), EvalError> {
    let (lo, hi) = (integer(lo, env)?, integer(hi, env)?);
    let len = hi.saturating_sub(lo).saturating_add(1);
    if len > MAX_RANGE {
        return Err(EvalError::RangeTooLarge {
            subterm: e.to_string(),
            len,
        });
    }
    Ok((lo, hi))
}

/// Smallest trig-capable conductor covering every angle `e` touches.
pub fn conductor_for(e: &Expr, binding: &ParamBinding) -> Result<u64, EvalError> {
    let mut env = Env {
        params: binding,
        locals: Vec::new(),
    };
    let mut m = 4u64;
    collect_conductor(e, &mut env, &mut m)?;
    Ok(m)
}

fn collect_conductor(e: &Expr, env: &mut Env, m: &mut u64) -> Result<(), EvalError> {
    match &e.kind {
        ExprKind::Num(_) | ExprKind::Var(_) | ExprKind::Pi => Ok(()),
        ExprKind::Trig(_, arg) => {
            let theta = angle(arg, env)?;
            *m = m.lcm(&theta.min_conductor());
            if *m > MAX_CONDUCTOR {
                return Err(EvalError::ConductorTooLarge(*m));
            }
            Ok(())
        }
        ExprKind::Sqrt(_) => Err(EvalError::SqrtInExact),
        ExprKind::Neg(a) => collect_conductor(a, env, m),
        ExprKind::Binary(_, l, r) => {
            collect_conductor(l, env, m)?;
            collect_conductor(r, env, m)
        }
        ExprKind::Pow(b, _) => collect_conductor(b, env, m),
        ExprKind::Indexed {
            var, lo, hi, body, ..
        } => {
            let (lo, hi) = range(e, lo, hi, env)?;
            for v in lo..=hi {
                env.locals.push((var.clone(), v));
                let r = collect_conductor(body, env, m);
                env.locals.pop();
                r?;
            }
            Ok(())
        }
    }
}

struct Exact<'b> {
    field: Arc<CycloField>,
    env: Env<'b>,
    memo: HashMap<(TrigFn, PiRational), CycloElem>,
}

impl Exact<'_> {
    fn eval(&mut self, e: &Expr) -> Result<CycloElem, EvalError> {
        let field = self.field.clone();
        let f = &field;
        Ok(match &e.kind {
            ExprKind::Num(q) => CycloElem::rational(f, q.clone()),
            ExprKind::Var(v) => {
                CycloElem::rational(f, BigRational::from_integer(self.env.lookup(v)?.into()))
            }
            ExprKind::Pi => return Err(EvalError::BarePi(e.to_string())),
            ExprKind::Sqrt(_) => return Err(EvalError::SqrtInExact),
            ExprKind::Trig(func, arg) => {
                let theta = angle(arg, &self.env)?;
                if let Some(v) = self.memo.get(&(*func, theta)) {
                    return Ok(v.clone());
                }
                let v = trig_value(*func, theta, f).map_err(|err| match err {
                    CycloError::Pole { .. } => EvalError::Pole {
                        subterm: e.to_string(),
                        detail: err.to_string(),
                    },
                    other => other.into(),
                })?;
                self.memo.insert((*func, theta), v.clone());
                v
            }
            ExprKind::Neg(a) => -self.eval(a)?,
            ExprKind::Binary(op, l, r) => {
                let a = self.eval(l)?;
                let b = self.eval(r)?;
                match op {
                    BinOp::Add => a.try_add(&b)?,
                    BinOp::Sub => a.try_sub(&b)?,
                    BinOp::Mul => a.try_mul(&b)?,
                    BinOp::Div => {
                        if b.is_zero() {
                            return Err(EvalError::Pole {
                                subterm: e.to_string(),
                                detail: format!("divisor `{r}` evaluates to 0"),
                            });
                        }
                        a.try_div(&b)?
                    }
                }
            }
            ExprKind::Pow(b, x) => {
                let x = integer(x, &self.env)?;
                let b = self.eval(b)?;
                if b.is_zero() && x < 0 {
                    return Err(EvalError::Pole {
                        subterm: e.to_string(),
                        detail: "zero raised to a negative power".into(),
                    });
                }
                b.pow(x)?
            }
            ExprKind::Indexed {
                op,
                var,
                lo,
                hi,
                body,
            } => {
                let (lo, hi) = range(e, lo, hi, &self.env)?;
                let mut acc = match op {
                    Indexed::Sum => CycloElem::zero(f),
                    Indexed::Prod => CycloElem::one(f),
                };
                for v in lo..=hi {
                    self.env.locals.push((var.clone(), v));
                    let t = self.eval(body);
                    self.env.locals.pop();
                    let t = t?;
                    acc = match op {
                        Indexed::Sum => acc.try_add(&t)?,
                        Indexed::Prod => acc.try_mul(&t)?,
                    };
                }
                acc
            }
        })
    }
}

/// Exact value in `ℚ(ζ_M)` with `M` the smallest valid conductor.
pub fn eval_exact(e: &Expr, binding: &ParamBinding) -> Result<CycloElem, EvalError> {
    eval_exact_scaled(e, binding, 1)
}

/// As [`eval_exact`], in the conductor `multiple·M`.
pub fn eval_exact_scaled(
    e: &Expr,
    binding: &ParamBinding,
    multiple: u64,
) -> Result<CycloElem, EvalError> {
    let m = conductor_for(e, binding)? * multiple.max(1);
    if m > MAX_CONDUCTOR {
        return Err(EvalError::ConductorTooLarge(m));
    }
    eval_exact_in(e, binding, &CycloField::for_trig(m)?)
}

/// Evaluates in a caller-chosen field, which must cover every angle.
pub fn eval_exact_in(
    e: &Expr,
    binding: &ParamBinding,
    field: &Arc<CycloField>,
) -> Result<CycloElem, EvalError> {
    let mut ev = Exact {
        field: field.clone(),
        env: Env {
            params: binding,
            locals: Vec::new(),
        },
        memo: HashMap::new(),
    };
    ev.eval(e)
}

struct Numeric<'b> {
    pi: IntervalReal,
    prec: u32,
    env: Env<'b>,
    memo: HashMap<(TrigFn, PiRational), IntervalReal>,
}

impl Numeric<'_> {
    fn trig(
        &mut self,
        func: TrigFn,
        theta: PiRational,
        e: &Expr,
    ) -> Result<IntervalReal, EvalError> {
        if let Some(v) = self.memo.get(&(func, theta)) {
            return Ok(v.clone());
        }
        if func.has_pole_at(theta) {
            return Err(EvalError::Pole {
                subterm: e.to_string(),
                detail: CycloError::Pole { func, angle: theta }.to_string(),
            });
        }
        let s = || IntervalReal::sin_pi_rational(theta, &self.pi);
        let c = || IntervalReal::cos_pi_rational(theta, &self.pi);
        let v = match func {
            TrigFn::Sin => s(),
            TrigFn::Cos => c(),
            TrigFn::Tan => s().div(&c())?,
            TrigFn::Cot => c().div(&s())?,
            TrigFn::Sec => c().recip()?,
            TrigFn::Csc => s().recip()?,
        };
        self.memo.insert((func, theta), v.clone());
        Ok(v)
    }

    fn eval(&mut self, e: &Expr) -> Result<IntervalReal, EvalError> {
        let p = self.prec;
        Ok(match &e.kind {
            ExprKind::Num(q) => IntervalReal::from_rational(q, p),
            ExprKind::Var(v) => IntervalReal::from_int(self.env.lookup(v)?, p),
            ExprKind::Pi => self.pi.clone(),
            ExprKind::Sqrt(a) => self.eval(a)?.sqrt()?,
            ExprKind::Trig(func, arg) => {
                let theta = angle(arg, &self.env)?;
                self.trig(*func, theta, e)?
            }
            ExprKind::Neg(a) => -self.eval(a)?,
            ExprKind::Binary(op, l, r) => {
                let a = self.eval(l)?;
                let b = self.eval(r)?;
                match op {
                    BinOp::Add => &a + &b,
                    BinOp::Sub => &a - &b,
                    BinOp::Mul => &a * &b,
                    BinOp::Div => a.div(&b)?,
                }
            }
            ExprKind::Pow(b, x) => {
                let x = integer(x, &self.env)?;
                self.eval(b)?.powi(x)?
            }
            ExprKind::Indexed {
                op,
                var,
                lo,
                hi,
                body,
            } => {
                let (lo, hi) = range(e, lo, hi, &self.env)?;
                let mut acc = IntervalReal::from_int(
                    match op {
                        Indexed::Sum => 0,
                        Indexed::Prod => 1,
                    },
                    p,
                );
                for v in lo..=hi {
                    self.env.locals.push((var.clone(), v));
                    let t = self.eval(body);
                    self.env.locals.pop();
                    let t = t?;
                    acc = match op {
                        Indexed::Sum => &acc + &t,
                        Indexed::Prod => &acc * &t,
                    };
                }
                acc
            }
        })
    }
}

/// Rigorous enclosure of the value at `prec` working bits.
pub fn eval_interval(
    e: &Expr,
    binding: &ParamBinding,
    prec: u32,
) -> Result<IntervalReal, EvalError> {
    let mut ev = Numeric {
        pi: IntervalReal::pi(prec),
        prec,
        env: Env {
            params: binding,
            locals: Vec::new(),
        },
        memo: HashMap::new(),
    };
    ev.eval(e)
}
