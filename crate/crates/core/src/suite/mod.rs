//! Regression catalog of classical finite trigonometric identities.
//!
//! Each [`SuiteCase`] pairs an identity template with a hypothesis on its
//! parameters and a default sweep of bindings. Sweeps run through the exact
//! verifier; out-of-hypothesis bindings are skipped rather than failed. Two
//! cases are not single identities: `shevelev` compares a brute-force digit
//! count with a tangent power sum, and `franke` encloses an infinite series.

mod catalog;
mod special;

use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::expr::{
    parse_with_params, verify, EvalError, Identity, Mode, ParamBinding, ParseError, VerifyOptions,
    VerifyReport,
};

pub use special::{
    conjecture_closed_forms, conjecture_limits, extra_ident_check, franke_check, shevelev_check,
    FrankeReport, ShevelevCase, DEFAULT_BUDGET,
};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("binding {binding} violates the hypothesis of {id}: {hypothesis}")]
    Hypothesis {
        id: String,
        binding: ParamBinding,
        hypothesis: String,
    },
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("brute-force range {size} exceeds the budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },
    #[error("precision of {0} bits is too low")]
    PrecisionExhausted(u32),
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// χ_o: 1 on odd integers, 0 on even ones.
#[derive(Clone, Copy, Debug)]
pub struct ParityIndicator;

impl ParityIndicator {
    pub fn odd(m: i64) -> i64 {
        m.rem_euclid(2)
    }
}

/// Caps on the default sweep; `nmax` bounds the main size parameter.
#[derive(Clone, Copy, Debug, Default)]
pub struct SweepLimits {
    pub nmax: Option<i64>,
}

impl SweepLimits {
    fn cap(&self, default: i64) -> i64 {
        self.nmax.unwrap_or(default)
    }
}

#[derive(Clone, Debug)]
pub enum CaseKind {
    Identity {
        statement: String,
        params: &'static [&'static str],
        mode: Mode,
    },
    Shevelev,
    Franke,
}

pub struct SuiteCase {
    pub id: &'static str,
    /// Where the identity comes from, in words.
    pub source: &'static str,
    pub hypothesis: &'static str,
    /// The default sweep, in words.
    pub sweep: &'static str,
    pub note: Option<&'static str>,
    pub kind: CaseKind,
    check: fn(&ParamBinding) -> bool,
    derive: fn(&mut ParamBinding),
    generate: fn(&SweepLimits) -> Vec<ParamBinding>,
}

impl fmt::Debug for SuiteCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuiteCase")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

impl SuiteCase {
    /// The identity text, if this case is one.
    pub fn statement(&self) -> Option<&str> {
        match &self.kind {
            CaseKind::Identity { statement, .. } => Some(statement),
            _ => None,
        }
    }

    pub fn identity(&self) -> Option<Result<Identity, ParseError>> {
        match &self.kind {
            CaseKind::Identity {
                statement, params, ..
            } => Some(parse_identity_with(statement, params)),
            _ => None,
        }
    }

    /// Fills derived parameters and checks the hypothesis.
    pub fn admit(&self, binding: &ParamBinding) -> Option<ParamBinding> {
        let mut b = binding.clone();
        (self.derive)(&mut b);
        (self.check)(&b).then_some(b)
    }

    pub fn bindings(&self, limits: &SweepLimits) -> Vec<ParamBinding> {
        (self.generate)(limits)
    }
}

/// Splits at the `=` outside all parentheses.
pub(crate) fn split_statement(src: &str) -> (&str, &str) {
    let mut depth = 0i32;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '=' if depth == 0 => return (&src[..i], &src[i + 1..]),
            _ => {}
        }
    }
    panic!("catalog statement without a top-level `=`: {src}")
}

fn parse_identity_with(src: &str, params: &[&str]) -> Result<Identity, ParseError> {
    let (l, r) = split_statement(src);
    Ok(Identity {
        lhs: parse_with_params(l, params)?,
        rhs: parse_with_params(r, params)?,
    })
}

/// Every case, in a fixed order.
pub fn catalog() -> &'static [SuiteCase] {
    static CASES: OnceLock<Vec<SuiteCase>> = OnceLock::new();
    CASES.get_or_init(catalog::build)
}

pub fn find(id: &str) -> Result<&'static SuiteCase, SuiteError> {
    catalog()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| SuiteError::UnknownCase(id.to_string()))
}

/// Cases whose id starts with `filter` (all cases for `None`).
pub fn select(filter: Option<&str>) -> Result<Vec<&'static SuiteCase>, SuiteError> {
    let out: Vec<_> = catalog()
        .iter()
        .filter(|c| filter.is_none_or(|f| c.id.starts_with(f)))
        .collect();
    if out.is_empty() {
        return Err(SuiteError::UnknownCase(filter.unwrap_or("").to_string()));
    }
    Ok(out)
}

fn run_admitted(
    case: &SuiteCase,
    parsed: Option<&Identity>,
    b: &ParamBinding,
) -> Result<VerifyReport, SuiteError> {
    match (&case.kind, parsed) {
        (CaseKind::Identity { mode, .. }, Some(ident)) => {
            let opts = match mode {
                Mode::Exact => VerifyOptions::exact(),
                Mode::Numeric => VerifyOptions::numeric(256),
            };
            Ok(verify(&ident.lhs, &ident.rhs, b, &opts)?)
        }
        (CaseKind::Shevelev, _) => {
            let n = param(b, "n")?;
            let p = param(b, "p")?;
            Ok(shevelev_check(n as u64, p as u32, DEFAULT_BUDGET)?.report())
        }
        (CaseKind::Franke, _) => Ok(franke_check(param(b, "N")? as u64, 128)?.report()),
        (CaseKind::Identity { .. }, None) => unreachable!("identity cases are parsed first"),
    }
}

fn param(b: &ParamBinding, name: &str) -> Result<i64, SuiteError> {
    b.get(name)
        .ok_or_else(|| SuiteError::MissingParam(name.to_string()))
}

/// Verifies one case at one binding.
pub fn run_case(id: &str, binding: &ParamBinding) -> Result<VerifyReport, SuiteError> {
    let case = find(id)?;
    let b = case.admit(binding).ok_or_else(|| SuiteError::Hypothesis {
        id: id.to_string(),
        binding: binding.clone(),
        hypothesis: case.hypothesis.to_string(),
    })?;
    let parsed = case.identity().transpose()?;
    run_admitted(case, parsed.as_ref(), &b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Skipped,
    Failed(String),
}

/// Aggregate of one case's sweep.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub id: &'static str,
    pub source: &'static str,
    pub note: Option<&'static str>,
    pub bindings_run: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
    pub elapsed: std::time::Duration,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<22} {} run, {} passed, {} skipped, {} failed",
            self.id, self.bindings_run, self.passed, self.skipped, self.failed
        )?;
        if let Some(e) = &self.first_failure {
            write!(f, "; first failure: {e}")?;
        }
        Ok(())
    }
}

fn outcome(case: &SuiteCase, parsed: Option<&Identity>, b: &ParamBinding) -> Outcome {
    let Some(b) = case.admit(b) else {
        return Outcome::Skipped;
    };
    match run_admitted(case, parsed, &b) {
        Ok(r) if r.verdict.holds() => Outcome::Passed,
        Ok(r) => Outcome::Failed(format!("{b}: {r}")),
        Err(e) => Outcome::Failed(format!("{b}: {e}")),
    }
}

/// Runs a case's default sweep; bindings run in parallel, results keep
/// generator order.
pub fn sweep(id: &str, limits: &SweepLimits) -> Result<SweepReport, SuiteError> {
    sweep_case(find(id)?, limits)
}

fn sweep_case(case: &'static SuiteCase, limits: &SweepLimits) -> Result<SweepReport, SuiteError> {
    let start = Instant::now();
    let parsed = case.identity().transpose()?;
    let outcomes: Vec<Outcome> = case
        .bindings(limits)
        .par_iter()
        .map(|b| outcome(case, parsed.as_ref(), b))
        .collect();
    let mut r = SweepReport {
        id: case.id,
        source: case.source,
        note: case.note,
        bindings_run: outcomes.len(),
        passed: 0,
        skipped: 0,
        failed: 0,
        first_failure: None,
        elapsed: start.elapsed(),
    };
    for o in outcomes {
        match o {
            Outcome::Passed => r.passed += 1,
            Outcome::Skipped => r.skipped += 1,
            Outcome::Failed(msg) => {
                r.failed += 1;
                r.first_failure.get_or_insert(msg);
            }
        }
    }
    Ok(r)
}

/// Sweeps every selected case; the result is ordered by case id.
pub fn run_suite(
    filter: Option<&str>,
    limits: &SweepLimits,
) -> Result<Vec<SweepReport>, SuiteError> {
    let cases = select(filter)?;
    let mut out = cases
        .into_par_iter()
        .map(|c| sweep_case(c, limits))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.id.cmp(b.id));
    Ok(out)
}
