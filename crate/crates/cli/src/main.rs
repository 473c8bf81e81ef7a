//! `trigsum`: verify trigonometric identities, derive power-sum formulas and
//! run the identity catalog.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trigsum::expr::{parse_identity, verify, EvalError, ParamBinding, Verdict, VerifyOptions};
use trigsum::powersum::{FamilyId, PowerSumEngine, PowerSumError, K_MAX_CEILING};
use trigsum::suite::{
    catalog, franke_check, run_suite, shevelev_check, SuiteError, SweepLimits, DEFAULT_BUDGET,
};

use output::{CaseListing, OutputFormula, SuiteRow, VerifyJson};

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;

/// Largest k accepted without `--allow-large-k`.
const K_DEFAULT_LIMIT: u64 = 10;

#[derive(Parser)]
#[command(
    name = "trigsum",
    version,
    about = "Exact finite trigonometric sums at rational multiples of pi"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide `lhs = rhs` (a bare expression means `= 0`).
    Verify {
        expr: String,
        /// Parameter binding, `name=int`; repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, i64)>,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        /// Target enclosure width, in bits, for numeric mode.
        #[arg(long, default_value_t = 256)]
        prec: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Closed-form power sums for one family.
    Derive {
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        range: KRange,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Add a LaTeX-style rendering.
        #[arg(long)]
        typeset: bool,
        /// Permit k above 10 (up to 60).
        #[arg(long)]
        allow_large_k: bool,
    },
    /// Write formulas for several families to a file.
    Table {
        /// Comma-separated family names.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<FamilyId>,
        #[arg(long)]
        kmax: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        allow_large_k: bool,
    },
    /// Sweep the identity catalog.
    Suite {
        /// Only cases whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Cap on the main size parameter of each sweep.
        #[arg(long)]
        nmax: Option<i64>,
        /// Print the catalog instead of running it.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Digit-sum count against the tangent power sum.
    Shevelev {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Enclose the cotangent Dirichlet series and compare with its closed form.
    Franke {
        #[arg(long = "N")]
        modulus: u64,
        #[arg(long, default_value_t = 128)]
        prec: u32,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct KRange {
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    kmax: Option<u64>,
}

#[derive(Copy, Clone, ValueEnum)]
enum ModeArg {
    Exact,
    Numeric,
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (name, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=int, got `{s}`"))?;
    let v = v
        .trim()
        .parse()
        .map_err(|_| format!("`{v}` is not an integer"))?;
    Ok((name.trim().to_string(), v))
}

/// A failure with its exit code.
struct Failure(u8, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Verify {
            expr,
            params,
            mode,
            prec,
            format,
        } => cmd_verify(&expr, params, mode, prec, format),
        Command::Derive {
            family,
            range,
            format,
            typeset,
            allow_large_k,
        } => cmd_derive(family, range, format, typeset, allow_large_k),
        Command::Table {
            families,
            kmax,
            out,
            format,
            allow_large_k,
        } => cmd_table(&families, kmax, &out, format, allow_large_k),
        Command::Suite {
            filter,
            nmax,
            list,
            format,
        } => cmd_suite(filter.as_deref(), nmax, list, format),
        Command::Shevelev { n, p, budget } => cmd_shevelev(n, p, budget),
        Command::Franke { modulus, prec } => cmd_franke(modulus, prec),
    }
}

fn caret(src: &str, col: usize) -> String {
    format!("  {src}\n  {}^", " ".repeat(col))
}

fn cmd_verify(
    src: &str,
    params: Vec<(String, i64)>,
    mode: ModeArg,
    prec: u32,
    format: Format,
) -> Result<u8, Failure> {
    let ident = parse_identity(src)
        .map_err(|e| Failure(EXIT_PARSE, format!("{e}\n{}", caret(src, e.span.start))))?;
    let mut binding = ParamBinding::new();
    for (name, v) in &params {
        binding.set(name, *v);
    }
    let mut free = ident.lhs.free_params();
    free.extend(ident.rhs.free_params());
    let missing: Vec<_> = free.iter().filter(|p| binding.get(p).is_none()).collect();
    if !missing.is_empty() {
        let names: Vec<&str> = missing.iter().map(|s| s.as_str()).collect();
        return Err(usage(format!(
            "unbound parameter(s): {} (pass --param name=int)",
            names.join(", ")
        )));
    }
    let opts = match mode {
        ModeArg::Exact => VerifyOptions::exact(),
        ModeArg::Numeric => VerifyOptions::numeric(prec),
    };
    let report = match verify(&ident.lhs, &ident.rhs, &binding, &opts) {
        Ok(r) => r,
        Err(e @ (EvalError::SqrtInExact | EvalError::BarePi(_))) => {
            return Err(usage(format!("{e} (try --mode numeric)")));
        }
        Err(e) => return Err(Failure(EXIT_INCONCLUSIVE, e.to_string())),
    };
    match format {
        Format::Text => println!("{report}"),
        Format::Json => println!("{}", to_json(&VerifyJson::new(&ident, &binding, &report))),
    }
    Ok(match report.verdict {
        Verdict::Proved | Verdict::ConfirmedToPrecision => EXIT_PASS,
        Verdict::Refuted => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn check_k(k: u64, allow_large: bool) -> Result<(), Failure> {
    if k == 0 {
        return Err(usage("k must be at least 1"));
    }
    if k > K_MAX_CEILING {
        return Err(usage(format!(
            "k = {k} exceeds the ceiling {K_MAX_CEILING}"
        )));
    }
    if k > K_DEFAULT_LIMIT && !allow_large {
        return Err(usage(format!(
            "k = {k} is above {K_DEFAULT_LIMIT}; pass --allow-large-k"
        )));
    }
    Ok(())
}

fn formulas(family: FamilyId, kmax: u64, typeset: bool) -> Result<Vec<OutputFormula>, Failure> {
    let fs = PowerSumEngine::global()
        .power_sums(family, kmax)
        .map_err(|e: PowerSumError| usage(e.to_string()))?;
    Ok(fs.iter().map(|f| OutputFormula::new(f, typeset)).collect())
}

fn cmd_derive(
    family: FamilyId,
    range: KRange,
    format: Format,
    typeset: bool,
    allow_large: bool,
) -> Result<u8, Failure> {
    let (lo, hi) = match (range.k, range.kmax) {
        (Some(k), _) => (k, k),
        (_, Some(k)) => (1, k),
        _ => unreachable!("clap enforces one of --k/--kmax"),
    };
    check_k(hi, allow_large)?;
    let mut fs = formulas(family, hi, typeset)?;
    fs.retain(|f| f.k >= lo);
    match format {
        Format::Text => {
            for f in &fs {
                println!("{}", f.text_line());
                if let Some(t) = &f.typeset {
                    println!("  {t}");
                }
            }
        }
        Format::Json if range.k.is_some() => println!("{}", to_json(&fs[0])),
        Format::Json => println!("{}", to_json(&fs)),
    }
    Ok(EXIT_PASS)
}

fn cmd_table(
    families: &[FamilyId],
    kmax: u64,
    out: &PathBuf,
    format: Format,
    allow_large: bool,
) -> Result<u8, Failure> {
    check_k(kmax, allow_large)?;
    let mut all = Vec::new();
    for &f in families {
        all.extend(formulas(f, kmax, false)?);
    }
    let body = match format {
        Format::Json => to_json(&all) + "\n",
        Format::Text => all.iter().map(|f| f.text_line() + "\n").collect(),
    };
    std::fs::write(out, body)
        .map_err(|e| Failure(EXIT_INCONCLUSIVE, format!("{}: {e}", out.display())))?;
    println!("wrote {} formulas to {}", all.len(), out.display());
    Ok(EXIT_PASS)
}

fn cmd_suite(
    filter: Option<&str>,
    nmax: Option<i64>,
    list: bool,
    format: Format,
) -> Result<u8, Failure> {
    let unknown = |e: SuiteError| match e {
        SuiteError::UnknownCase(_) => usage(e.to_string()),
        e => Failure(EXIT_FAIL, e.to_string()),
    };
    if list {
        let cases = trigsum::suite::select(filter).map_err(unknown)?;
        let rows: Vec<_> = cases.iter().map(|c| CaseListing::new(c)).collect();
        match format {
            Format::Json => println!("{}", to_json(&rows)),
            Format::Text => {
                for c in &rows {
                    println!("{}  [{}]  {}", c.id, c.hypothesis, c.sweep);
                }
            }
        }
        return Ok(EXIT_PASS);
    }
    let reports = run_suite(filter, &SweepLimits { nmax }).map_err(unknown)?;
    let failed = reports.iter().filter(|r| !r.ok()).count();
    match format {
        Format::Json => {
            let rows: Vec<_> = reports.iter().map(SuiteRow::new).collect();
            println!("{}", to_json(&rows));
        }
        Format::Text => {
            for r in &reports {
                println!("{r}");
                if let Some(n) = r.note {
                    println!("    note: {n}");
                }
            }
            println!(
                "{} cases, {} failed (of {} in the catalog)",
                reports.len(),
                failed,
                catalog().len()
            );
        }
    }
    Ok(if failed == 0 { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_shevelev(n: u64, p: u32, budget: u64) -> Result<u8, Failure> {
    let c = shevelev_check(n, p, budget).map_err(|e| usage(e.to_string()))?;
    println!("S_{n}({}^{}) = {}", n - 1, 2 * p, c.count);
    println!("(2/{n}) * sum tan^{}(k*pi/{n}) = {}", 2 * p, c.tan_sum);
    println!("lambda_{n} = {:.6}, log ratio = {:.6}", c.lambda, c.ratio);
    println!("{}", c.report());
    Ok(if c.holds() { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_franke(modulus: u64, prec: u32) -> Result<u8, Failure> {
    let r = franke_check(modulus, prec).map_err(|e| usage(e.to_string()))?;
    println!(
        "N = {modulus}, {} terms, {} bits",
        r.terms, r.precision_bits
    );
    println!("closed form  {}", r.closed_form);
    println!("enclosure    {}", r.enclosure);
    println!("{}", r.report());
    Ok(if r.enclosed() { EXIT_PASS } else { EXIT_FAIL })
}
