//! Serialized shapes. Field order is fixed, so JSON output is byte-stable.

use serde::Serialize;

use trigsum::expr::{Identity, ParamBinding, VerifyReport};
use trigsum::powersum::{factor_linear, factored_display, PowerSumFormula};
use trigsum::suite::{CaseKind, SuiteCase, SweepReport};
use trigsum::BigRational;

#[derive(Serialize)]
pub struct OutputFormula {
    pub family: String,
    pub k: u64,
    /// `"p/q"` strings, indexed by degree in `n`.
    pub coeffs: Vec<String>,
    pub display: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub typeset: Option<String>,
}

fn ratio_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl OutputFormula {
    pub fn new(f: &PowerSumFormula, typeset: bool) -> Self {
        OutputFormula {
            family: f.family.name().to_string(),
            k: f.k,
            coeffs: f.poly.coeffs().iter().map(ratio_string).collect(),
            display: factored_display(&f.poly),
            typeset: factor_linear(&f.poly)
                .filter(|_| typeset)
                .map(|x| x.typeset()),
        }
    }

    pub fn text_line(&self) -> String {
        format!("{}_{} = {}", self.family, self.k, self.display)
    }
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub identity: String,
    pub params: Vec<(String, i64)>,
    pub mode: String,
    pub verdict: String,
    pub conductor: Option<u64>,
    pub precision_bits: Option<u32>,
    pub residual_log2: Option<f64>,
    pub witness: Option<String>,
    pub witness_approx: Option<f64>,
}

impl VerifyJson {
    pub fn new(ident: &Identity, b: &ParamBinding, r: &VerifyReport) -> Self {
        VerifyJson {
            identity: ident.to_string(),
            params: b.iter().map(|(k, v)| (k.to_string(), v)).collect(),
            mode: r.mode.to_string(),
            verdict: r.verdict.to_string(),
            conductor: r.conductor,
            precision_bits: r.precision_bits,
            residual_log2: r.residual_log2,
            witness: r.witness.as_ref().map(|w| w.residual.clone()),
            witness_approx: r.witness.as_ref().map(|w| w.approx),
        }
    }
}

#[derive(Serialize)]
pub struct SuiteRow {
    pub id: &'static str,
    pub source: &'static str,
    pub bindings_run: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl SuiteRow {
    pub fn new(r: &SweepReport) -> Self {
        SuiteRow {
            id: r.id,
            source: r.source,
            bindings_run: r.bindings_run,
            passed: r.passed,
            skipped: r.skipped,
            failed: r.failed,
            first_failure: r.first_failure.clone(),
            note: r.note,
        }
    }
}

#[derive(Serialize)]
pub struct CaseListing {
    pub id: &'static str,
    pub source: &'static str,
    pub statement: String,
    pub hypothesis: &'static str,
    pub sweep: &'static str,
}

impl CaseListing {
    pub fn new(c: &SuiteCase) -> Self {
        let statement = match &c.kind {
            CaseKind::Identity { statement, .. } => statement.clone(),
            CaseKind::Shevelev => {
                "S_n((n-1)^(2p)) = (2/n)*sum(k=1..(n-1)/2, tan(k*pi/n)^(2p))".into()
            }
            CaseKind::Franke => {
                "sum(m>=1, N!|m, cot(m*pi/N)^2/m^2) = (N-1)(N-2)(N^2+3N+2)pi^2/(90N^2)".into()
            }
        };
        CaseListing {
            id: c.id,
            source: c.source,
            statement,
            hypothesis: c.hypothesis,
            sweep: c.sweep,
        }
    }
}
