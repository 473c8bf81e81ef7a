//! The acceptance criteria, one PASS/FAIL line each.

mod common;

use std::time::{Duration, Instant};

use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

use trigsum::expr::{
    eval_exact, eval_interval, parse, parse_identity, verify, BinOp, Expr, ParamBinding, Verdict,
    VerifyOptions,
};
use trigsum::powersum::{closed_form_sin, family_power_sums_exact, FamilyId, PowerSumEngine};
use trigsum::suite::{
    conjecture_closed_forms, conjecture_limits, franke_check, run_suite, shevelev_check, sweep,
    SweepLimits, DEFAULT_BUDGET,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Reference closed forms in factored form, k = 1..5.
const REFERENCE_FORMS: [(FamilyId, [&str; 5]); 4] = [
    (
        FamilyId::Ton,
        [
            "2*(n+1)*n/3",
            "8*(n+1)*n*(n^2+n+3)/45",
            "8*(n+1)*n*(8*n^4+16*n^3+35*n^2+27*n+54)/945",
            "128*(n+1)*n*(n^2+n+3)*(3*n^4+6*n^3+7*n^2+4*n+15)/14175",
            "64*(n+1)*n*(16*n^8+64*n^7+182*n^6+322*n^5+493*n^4+524*n^3+579*n^2+360*n+540)/93555",
        ],
    ),
    (
        FamilyId::Ten,
        [
            "2*n^2",
            "4*n^2*(2*n^2+1)/3",
            "8*n^2*(8*n^4+5*n^2+2)/15",
            "16*n^2*(136*n^6+112*n^4+49*n^2+18)/315",
            "32*n^2*(992*n^8+1020*n^6+546*n^4+205*n^2+72)/2835",
        ],
    ),
    (
        FamilyId::Uon,
        [
            "2*(n+1)*(n-1)/3",
            "4*(n+1)*(n-1)*(2*n^2+7)/45",
            "8*(n+1)*(n-1)*(8*n^4+29*n^2+71)/945",
            "16*(n+1)*(n-1)*(24*n^6+104*n^4+251*n^2+521)/14175",
            "32*(n+1)*(n-1)*(32*n^8+164*n^6+450*n^4+901*n^2+1693)/93555",
        ],
    ),
    (
        FamilyId::Uen,
        [
            "2*(n+1)*n",
            "8*(n+1)*n*(n^2+n+1)/3",
            "8*(n+1)*n*(8*n^4+16*n^3+19*n^2+11*n+6)/15",
            "128*(n+1)*n*(n^2+n+1)*(17*n^4+34*n^3+31*n^2+14*n+9)/315",
            "64*(n+1)*n*(496*n^8+1984*n^7+4106*n^6+5374*n^5+4979*n^4+3316*n^3+1669*n^2+576*n+180)/2835",
        ],
    ),
];

fn within(limit: Duration, start: Instant, detail: String) -> Outcome {
    let t = start.elapsed();
    if t <= limit {
        Ok(detail)
    } else {
        Err(format!("{detail}, but took {t:.1?} (limit {limit:?})"))
    }
}

// Both sides have degree at most 2k <= 10, so agreement at 13 points is
// polynomial equality.
fn reference_forms() -> Outcome {
    let start = Instant::now();
    let engine = PowerSumEngine::global();
    let mut checked = 0;
    for (family, forms) in REFERENCE_FORMS {
        let derived = engine.power_sums(family, 5).map_err(|e| e.to_string())?;
        for (f, src) in derived.iter().zip(forms) {
            let printed = parse(src).map_err(|e| e.to_string())?;
            for n in 0..=12 {
                let b = ParamBinding::new().with("n", n);
                let want = eval_exact(&printed, &b)
                    .map_err(|e| e.to_string())?
                    .as_rational()
                    .ok_or("reference value is not rational")?;
                if f.eval(n) != want {
                    return Err(format!("{family}_{} differs at n = {n}", f.k));
                }
            }
            if f.poly.degree() != Some(2 * f.k as usize) {
                return Err(format!("{family}_{} has degree {:?}", f.k, f.poly.degree()));
            }
            checked += 1;
        }
    }
    within(Duration::from_secs(1), start, format!("{checked} formulas"))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let engine = PowerSumEngine::global();
    let jobs: Vec<(FamilyId, u64)> = FamilyId::ALL
        .into_iter()
        .flat_map(|f| (1..=12).map(move |n| (f, n)))
        .collect();
    let counts = jobs
        .par_iter()
        .map(|&(family, n)| -> Result<usize, String> {
            let k_max = family.max_valid_k(n).min(8);
            let exact = family_power_sums_exact(family, n, k_max).map_err(|e| e.to_string())?;
            for (k, want) in (1..=k_max).zip(exact) {
                let f = engine.power_sum(family, k).map_err(|e| e.to_string())?;
                if f.eval(n as i64) != want {
                    return Err(format!("{family}, k = {k}, n = {n}"));
                }
            }
            Ok(k_max as usize)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let total: usize = counts.iter().sum();
    within(
        Duration::from_secs(30),
        start,
        format!("{total} exact checks"),
    )
}

fn closed_form_theorems() -> Outcome {
    let engine = PowerSumEngine::global();
    for family in [FamilyId::Top, FamilyId::Tep, FamilyId::Uop, FamilyId::Uep] {
        let derived = engine.power_sums(family, 20).map_err(|e| e.to_string())?;
        for f in derived {
            let closed = closed_form_sin(family, f.k).map_err(|e| e.to_string())?;
            if closed != f.poly {
                return Err(format!("{family}_{}: {} vs {}", f.k, closed, f.poly));
            }
        }
    }
    Ok("4 families, k <= 20".into())
}

fn identity_corpus() -> Outcome {
    let start = Instant::now();
    let reports = run_suite(None, &SweepLimits::default()).map_err(|e| e.to_string())?;
    let bindings: usize = reports.iter().map(|r| r.bindings_run).sum();
    if let Some(bad) = reports.iter().find(|r| !r.ok()) {
        return Err(bad.to_string());
    }
    within(
        Duration::from_secs(60),
        start,
        format!("{} cases, {bindings} bindings, 0 failures", reports.len()),
    )
}

fn landmarks() -> Outcome {
    let exact = |src: &str| -> Result<(), String> {
        let id = parse_identity(src).map_err(|e| e.to_string())?;
        let r = verify(
            &id.lhs,
            &id.rhs,
            &ParamBinding::new(),
            &VerifyOptions::exact(),
        )
        .map_err(|e| e.to_string())?;
        (r.verdict == Verdict::Proved)
            .then_some(())
            .ok_or_else(|| format!("{src}: {r}"))
    };
    exact("cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/8")?;
    exact("sin(3*pi/7)^2/sin(2*pi/7) - sin(2*pi/7)^2/sin(pi/7) + sin(pi/7)^2/sin(3*pi/7) = 0")?;

    let gauss = parse_identity(
        "cos(pi/17) = (1 - sqrt(17) + sqrt(34 - 2*sqrt(17)) \
         + 2*sqrt(17 + 3*sqrt(17) + sqrt(34 - 2*sqrt(17)) + 2*sqrt(34 + 2*sqrt(17))))/16",
    )
    .map_err(|e| e.to_string())?;
    let diff = Expr::binary(BinOp::Sub, gauss.lhs, gauss.rhs);
    let iv = eval_interval(&diff, &ParamBinding::new(), 256).map_err(|e| e.to_string())?;
    if !iv.contains_zero() || !iv.width_below_pow2(200) {
        return Err(format!("cos(pi/17) enclosure {iv}"));
    }
    Ok(format!(
        "Morrie and heptagon proved; cos(pi/17) width 2^{:.0}",
        iv.width_log2()
    ))
}

fn conjectures() -> Outcome {
    for k in 1..=30 {
        let (a, b) = conjecture_closed_forms(k).map_err(|e| e.to_string())?;
        if a.verdict != Verdict::Proved || b.verdict != Verdict::Proved {
            return Err(format!("k = {k}: {a}; {b}"));
        }
    }
    let (lo, hi) = conjecture_limits(500, 64).map_err(|e| e.to_string())?;
    let (a, b) = (lo.midpoint_f64(), hi.midpoint_f64());
    if (a + 0.5).abs() > 0.01 || (b - 0.5).abs() > 0.01 {
        return Err(format!("limits at k = 500: {a}, {b}"));
    }
    Ok(format!("k <= 30 proved; k = 500 gives {a:.5}, {b:.5}"))
}

fn shevelev() -> Outcome {
    let start = Instant::now();
    let pairs = [(3, 1..=5), (5, 1..=3), (7, 1..=2), (9, 1..=2)];
    let mut checked = 0;
    for (n, ps) in pairs {
        for p in ps {
            let c = shevelev_check(n, p, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            if !c.holds() {
                return Err(format!("n = {n}, p = {p}: {} vs {}", c.count, c.tan_sum));
            }
            checked += 1;
        }
    }
    within(Duration::from_secs(30), start, format!("{checked} pairs"))
}

fn franke() -> Outcome {
    for n in [3, 4, 5, 6, 10] {
        let r = franke_check(n, 128).map_err(|e| e.to_string())?;
        if !r.enclosed() {
            return Err(format!("N = {n}: {} not in {}", r.closed_form, r.enclosure));
        }
    }
    Ok("N in {3, 4, 5, 6, 10} enclosed".into())
}

fn run_property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Outcome {
    use common::*;
    run_property("field axioms", 200, field_triple(), |(m, p)| {
        field_axioms(m, &p)
    })?;
    run_property("Pythagorean identity", 200, angle(), pythagorean)?;
    run_property("parse round-trip", 500, expr_tree(), |e| {
        parse_round_trip(&e)
    })?;
    run_property(
        "Bezout identity",
        200,
        (rational_poly(12), rational_poly(12)),
        |(p, q)| bezout(&p, &q),
    )?;
    run_property("reciprocal involution", 200, rational_poly(15), |p| {
        reciprocal_involution(&p)
    })?;
    binomial_identity(200)?;
    for id in ["sin-product", "csc2-shift"] {
        let r = sweep(id, &SweepLimits::default()).map_err(|e| e.to_string())?;
        if !r.ok() {
            return Err(r.to_string());
        }
    }
    Ok("all properties hold".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("closed-form reproduction", reference_forms),
        ("oracle equivalence", oracle_equivalence),
        ("closed-form theorems", closed_form_theorems),
        ("identity corpus", identity_corpus),
        ("landmark identities", landmarks),
        ("alternating-sum conjectures", conjectures),
        ("digit-sum theorem", shevelev),
        ("cotangent series", franke),
        ("property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{t:.2?}]", i + 1),
            Err(why) => {
                println!("FAIL {}. {name}: {why} [{t:.2?}]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
