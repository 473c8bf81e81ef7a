use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{CaseKind, ParityIndicator, SuiteCase, SweepLimits};
use crate::expr::{Mode, ParamBinding};

fn odd(n: i64) -> bool {
    n.is_odd()
}

fn even(n: i64) -> bool {
    n.is_even()
}

fn coprime(a: i64, b: i64) -> bool {
    a.gcd(&b) == 1
}

fn get(b: &ParamBinding, name: &str) -> i64 {
    b.get(name).unwrap_or(i64::MIN)
}

fn one(name: &str, values: impl IntoIterator<Item = i64>) -> Vec<ParamBinding> {
    values
        .into_iter()
        .map(|v| ParamBinding::new().with(name, v))
        .collect()
}

fn odd_upto(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    (lo..=hi).filter(|v| odd(*v))
}

fn even_upto(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    (lo..=hi).filter(|v| even(*v))
}

fn keep(mut v: Vec<ParamBinding>, case: fn(&ParamBinding) -> bool) -> Vec<ParamBinding> {
    v.retain(case);
    v
}

fn no_derive(_: &mut ParamBinding) {}

fn always(_: &ParamBinding) -> bool {
    true
}

fn derive_p(b: &mut ParamBinding) {
    if let (Some(j), None) = (b.get("j"), b.get("p")) {
        if j % 2 == 0 {
            b.set("p", j / 2);
        }
    }
}

fn derive_c(b: &mut ParamBinding) {
    if let (Some(n), None) = (b.get("n"), b.get("c")) {
        b.set("c", ParityIndicator::odd((n - 1) / 2));
    }
}

fn odd_n_even_j(b: &ParamBinding) -> bool {
    let (n, j, p) = (get(b, "n"), get(b, "j"), get(b, "p"));
    odd(n) && n >= 3 && j >= 2 && j == 2 * p && coprime(j, n)
}

fn even_n_j2mod4(b: &ParamBinding) -> bool {
    let (n, j) = (get(b, "n"), get(b, "j"));
    n >= 2 && even(n) && j > 0 && j % 4 == 2 && coprime(j / 2, n / 2)
}

fn with_p(b: &ParamBinding) -> bool {
    even_n_j2mod4(b) && get(b, "p") * 2 == get(b, "j")
}

fn odd_n_coprime_j(b: &ParamBinding) -> bool {
    let (n, j) = (get(b, "n"), get(b, "j"));
    odd(n) && n >= 3 && j >= 1 && coprime(j, n)
}

fn odd_n_even_j_sweep(l: &SweepLimits) -> Vec<ParamBinding> {
    let mut out = Vec::new();
    for n in odd_upto(3, l.cap(21)) {
        for p in 1..=n {
            out.push(
                ParamBinding::new()
                    .with("n", n)
                    .with("j", 2 * p)
                    .with("p", p),
            );
        }
    }
    keep(out, odd_n_even_j)
}

fn even_n_j2mod4_sweep(l: &SweepLimits) -> Vec<ParamBinding> {
    let mut out = Vec::new();
    for n in even_upto(2, l.cap(24)) {
        for j in (2..=2 * n).step_by(4) {
            out.push(
                ParamBinding::new()
                    .with("n", n)
                    .with("j", j)
                    .with("p", j / 2),
            );
        }
    }
    keep(out, with_p)
}

fn odd_n_coprime_j_sweep(l: &SweepLimits) -> Vec<ParamBinding> {
    let mut out = Vec::new();
    for n in odd_upto(3, l.cap(21)) {
        for j in 1..=2 * n {
            out.push(ParamBinding::new().with("n", n).with("j", j));
        }
    }
    keep(out, odd_n_coprime_j)
}

fn n_from_1(l: &SweepLimits) -> Vec<ParamBinding> {
    one("n", 1..=l.cap(30))
}

fn odd_n_sweep(l: &SweepLimits) -> Vec<ParamBinding> {
    one("n", odd_upto(1, l.cap(30)))
}

fn even_n_sweep(l: &SweepLimits) -> Vec<ParamBinding> {
    one("n", even_upto(2, l.cap(30)))
}

fn odd_n(b: &ParamBinding) -> bool {
    odd(get(b, "n")) && get(b, "n") >= 1
}

fn even_n(b: &ParamBinding) -> bool {
    even(get(b, "n")) && get(b, "n") >= 2
}

fn n_positive(b: &ParamBinding) -> bool {
    get(b, "n") >= 1
}

/// Random `θ = a/b` (times π) with small denominators, reproducible.
fn random_angles(seed: u64, count: usize) -> Vec<(i64, i64)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| (rng.gen_range(-12..=12), rng.gen_range(1..=9)))
        .collect()
}

fn extra_ident(b: &ParamBinding) -> bool {
    let n = get(b, "n");
    odd(n) && n >= 3 && get(b, "c") == ParityIndicator::odd((n - 1) / 2)
}

fn extra_ident_sweep(l: &SweepLimits) -> Vec<ParamBinding> {
    odd_upto(3, l.cap(21))
        .map(|n| {
            let mut b = ParamBinding::new().with("n", n);
            derive_c(&mut b);
            b
        })
        .collect()
}

const EQ07_SUMMAND: &str = "sin((j+1)*(2*k+1)*pi/(2*n))*sin((j-1)*(2*k+1)*pi/(2*n))\
    /(sin((2*k+1)*pi/(2*n))^2*sin(p*(2*k+1)*pi/n)^2)";

pub(super) fn build() -> Vec<SuiteCase> {
    let ident = |statement: &'static str, params: &'static [&'static str]| CaseKind::Identity {
        statement: statement.to_string(),
        params,
        mode: Mode::Exact,
    };
    let owned = |statement: String, params: &'static [&'static str]| CaseKind::Identity {
        statement,
        params,
        mode: Mode::Exact,
    };
    let mut cases = vec![
        SuiteCase {
            id: "eq05",
            source: "alternating sine sum over odd denominators 2k",
            hypothesis: "k odd, k >= 3",
            sweep: "odd k in 3..=25",
            note: Some("k = 1 gives an empty sum; it is outside the hypothesis, not a counterexample"),
            kind: ident(
                "sum(j=1..(k-1)/2, (-1)^(j-1)*sin((2*j-1)*pi/(2*k))) = (-1)^((k-3)/2)/2",
                &["k"],
            ),
            check: |b| odd(get(b, "k")) && get(b, "k") >= 3,
            derive: no_derive,
            generate: |l| one("k", odd_upto(3, l.cap(25))),
        },
        SuiteCase {
            id: "eq06",
            source: "alternating cosecant sum over odd denominators 2k",
            hypothesis: "k odd, k >= 1",
            sweep: "odd k in 1..=25",
            note: None,
            kind: ident(
                "sum(j=1..(k-1)/2, (-1)^(j-1)*csc((2*j-1)*pi/(2*k))) = (k + (-1)^((k+1)/2))/2",
                &["k"],
            ),
            check: |b| odd(get(b, "k")) && get(b, "k") >= 1,
            derive: no_derive,
            generate: |l| one("k", odd_upto(1, l.cap(25))),
        },
        SuiteCase {
            id: "eq07",
            source: "sine-product quotient sum, n odd, j = 2p",
            hypothesis: "n odd >= 3, j = 2p even, gcd(j, n) = 1",
            sweep: "odd n in 3..=21, p in 1..=n",
            note: None,
            kind: owned(
                format!("sum(k=0..(n-3)/2, {EQ07_SUMMAND}) = (n^2-1)/3"),
                &["n", "j", "p"],
            ),
            check: odd_n_even_j,
            derive: derive_p,
            generate: odd_n_even_j_sweep,
        },
        SuiteCase {
            id: "eq08",
            source: "sine-product quotient sum, n even, j = 2 mod 4, summed from k = 0",
            hypothesis: "n even, j = 2 mod 4, p = j/2, gcd(j/2, n/2) = 1",
            sweep: "even n in 2..=24, j = 2 mod 4 up to 2n",
            note: Some(
                "the statement sums from k = 0 and holds; the decomposition sums from k = 1 \
                 and differs by the k = 0 term (see eq08-shifted); p is bound to j/2",
            ),
            kind: owned(
                format!("sum(k=0..n/2-1, {EQ07_SUMMAND}) = n^2/4"),
                &["n", "j", "p"],
            ),
            check: with_p,
            derive: derive_p,
            generate: even_n_j2mod4_sweep,
        },
        SuiteCase {
            id: "eq08-shifted",
            source: "the same sum started at k = 1",
            hypothesis: "n even, j = 2 mod 4, p = j/2, gcd(j/2, n/2) = 1",
            sweep: "even n in 2..=24, j = 2 mod 4 up to 2n",
            note: Some(
                "starting at k = 1 the value is n^2/4 minus the k = 0 term \
                 csc^2(pi/(2n)) - csc^2(p*pi/n), so n^2/4 alone fails whenever that term is nonzero",
            ),
            kind: owned(
                format!(
                    "sum(k=1..n/2-1, {EQ07_SUMMAND}) = n^2/4 - csc(pi/(2*n))^2 + csc(p*pi/n)^2"
                ),
                &["n", "j", "p"],
            ),
            check: with_p,
            derive: derive_p,
            generate: even_n_j2mod4_sweep,
        },
        SuiteCase {
            id: "eq09",
            source: "sine-product quotient sum over k*pi/n, n even",
            hypothesis: "n even, j = 2 mod 4, gcd(j/2, n/2) = 1",
            sweep: "even n in 2..=24, j = 2 mod 4 up to 2n",
            note: Some("the k = 0 term is 0/0, so the sum starts at k = 1"),
            kind: ident(
                "sum(k=1..n/2-1, sin((j+1)*k*pi/n)*sin((j-1)*k*pi/n)\
                 /(sin(k*pi/n)^2*sin(j*k*pi/n)^2)) = (n^2-4)/12",
                &["n", "j"],
            ),
            check: even_n_j2mod4,
            derive: no_derive,
            generate: even_n_j2mod4_sweep,
        },
        SuiteCase {
            id: "eq10",
            source: "sine-product quotient sum, n odd, vanishing",
            hypothesis: "n odd >= 3, j >= 1, gcd(j, n) = 1",
            sweep: "odd n in 3..=21, j in 1..=2n",
            note: None,
            kind: ident(
                "sum(k=0..(n-3)/2, sin((j+1)*(2*k+1)*pi/n)*sin((j-1)*(2*k+1)*pi/n)\
                 /(sin((2*k+1)*pi/n)^2*sin(j*(2*k+1)*pi/n)^2)) = 0",
                &["n", "j"],
            ),
            check: odd_n_coprime_j,
            derive: no_derive,
            generate: odd_n_coprime_j_sweep,
        },
        SuiteCase {
            id: "alt-sin",
            source: "alternating sine sum over denominator 4n+2",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident(
                "sum(j=1..n, (-1)^(j+1)*sin((2*j-1)*pi/(4*n+2))) = (-1)^(n+1)/2",
                &["n"],
            ),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "alt-cos",
            source: "companion alternating cosine sum over denominator 2n+1",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident("sum(j=1..n, (-1)^(j+1)*cos(j*pi/(2*n+1))) = 1/2", &["n"]),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "alt-cos2",
            source: "alternating cosine-squared sum",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident("sum(k=1..n, (-1)^(k+1)*cos(k*pi/(2*n+2))^2) = 1/2", &["n"]),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "alt-sin2",
            source: "alternating sine-squared sum",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident(
                "sum(k=1..n, (-1)^(k+1)*sin(k*pi/(2*n+2))^2) = (-1)^(n+1)/2",
                &["n"],
            ),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "cos-progression",
            source: "cosines in arithmetic progression, alpha = a*pi/b, beta = c*pi/d",
            hypothesis: "sin(beta/2) != 0, K >= 1",
            sweep: "50 seeded random (a, b, c, d, K)",
            note: None,
            kind: ident(
                "sum(t=0..K-1, cos((a*d+t*c*b)*pi/(b*d))) \
                 = sin(K*c*pi/(2*d))/sin(c*pi/(2*d))*cos((2*a*d+c*b*(K-1))*pi/(2*b*d))",
                &["a", "b", "c", "d", "K"],
            ),
            check: |b| {
                get(b, "b") >= 1
                    && get(b, "d") >= 1
                    && get(b, "K") >= 1
                    && get(b, "c") % (2 * get(b, "d")) != 0
            },
            derive: no_derive,
            generate: |_| {
                let mut rng = StdRng::seed_from_u64(0x5eed_0001);
                let mut out = Vec::new();
                while out.len() < 50 {
                    let b = ParamBinding::new()
                        .with("a", rng.gen_range(-15..=15))
                        .with("b", rng.gen_range(1..=9))
                        .with("c", rng.gen_range(-15..=15))
                        .with("d", rng.gen_range(1..=9))
                        .with("K", rng.gen_range(1..=12));
                    if get(&b, "c") % (2 * get(&b, "d")) != 0 {
                        out.push(b);
                    }
                }
                out
            },
        },
        SuiteCase {
            id: "alt-csc",
            source: "alternating cosecant sum over denominator 4n+2",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident(
                "sum(j=0..n-1, (-1)^j*csc((2*j+1)*pi/(4*n+2))) = n + (1-(-1)^n)/2",
                &["n"],
            ),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "bromwich-I",
            source: "Bromwich, half-range cosecant squares, n odd",
            hypothesis: "n odd",
            sweep: "odd n in 1..=30",
            note: None,
            kind: ident("sum(k=1..(n-1)/2, csc(k*pi/n)^2) = (n^2-1)/6", &["n"]),
            check: odd_n,
            derive: no_derive,
            generate: odd_n_sweep,
        },
        SuiteCase {
            id: "bromwich-II",
            source: "Bromwich, half-range cosecant squares, n even",
            hypothesis: "n even",
            sweep: "even n in 2..=30",
            note: None,
            kind: ident("sum(k=1..n/2-1, csc(k*pi/n)^2) = (n^2-4)/6", &["n"]),
            check: even_n,
            derive: no_derive,
            generate: even_n_sweep,
        },
        SuiteCase {
            id: "bromwich-III",
            source: "Bromwich, odd-multiple cosecant squares, n odd",
            hypothesis: "n odd",
            sweep: "odd n in 1..=30",
            note: None,
            kind: ident(
                "sum(k=0..(n-3)/2, csc((2*k+1)*pi/(2*n))^2) = (n^2-1)/2",
                &["n"],
            ),
            check: odd_n,
            derive: no_derive,
            generate: odd_n_sweep,
        },
        SuiteCase {
            id: "bromwich-IV",
            source: "Bromwich, odd-multiple cosecant squares, n even",
            hypothesis: "n even",
            sweep: "even n in 2..=30",
            note: None,
            kind: ident("sum(k=0..n/2-1, csc((2*k+1)*pi/(2*n))^2) = n^2/2", &["n"]),
            check: even_n,
            derive: no_derive,
            generate: even_n_sweep,
        },
        SuiteCase {
            id: "remark-fisher",
            source: "full-range cosecant squares",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident("sum(k=1..n-1, csc(k*pi/n)^2) = (n^2-1)/3", &["n"]),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "remark-bru",
            source: "odd-multiple cosecant squares over a full period",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident("sum(k=0..n-1, csc((2*k+1)*pi/(2*n))^2) = n^2", &["n"]),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "remark-bru-shifted",
            source: "the same sum with indices 1..n",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident("sum(k=1..n, csc((2*k+1)*pi/(2*n))^2) = n^2", &["n"]),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "cot-squares",
            source: "full-range cotangent squares",
            hypothesis: "n >= 1",
            sweep: "n in 1..=30",
            note: None,
            kind: ident("sum(k=1..n-1, cot(k*pi/n)^2) = (n-1)*(n-2)/3", &["n"]),
            check: n_positive,
            derive: no_derive,
            generate: n_from_1,
        },
        SuiteCase {
            id: "lemma-easy-i",
            source: "odd multiples scaled by p, n odd",
            hypothesis: "n odd >= 3, gcd(p, n) = 1",
            sweep: "odd n in 3..=21, p in 1..=n",
            note: None,
            kind: ident(
                "sum(k=0..(n-3)/2, csc(p*(2*k+1)*pi/n)^2) = (n^2-1)/6",
                &["n", "p"],
            ),
            check: |b| odd(get(b, "n")) && get(b, "n") >= 3 && coprime(get(b, "p"), get(b, "n")),
            derive: no_derive,
            generate: |l| {
                let mut out = Vec::new();
                for n in odd_upto(3, l.cap(21)) {
                    for p in (1..=n).filter(|p| coprime(*p, n)) {
                        out.push(ParamBinding::new().with("n", n).with("p", p));
                    }
                }
                out
            },
        },
        SuiteCase {
            id: "lemma-easy-i-split",
            source: "odd multiples as full range minus half the doubled range",
            hypothesis: "n odd >= 3, gcd(p, n) = 1",
            sweep: "odd n in 3..=21, p in 1..=n",
            note: None,
            kind: ident(
                "sum(k=0..(n-3)/2, csc(p*(2*k+1)*pi/n)^2) \
                 = sum(l=1..n-1, csc(p*l*pi/n)^2) - 1/2*sum(r=1..n-1, csc(2*p*r*pi/n)^2)",
                &["n", "p"],
            ),
            check: |b| odd(get(b, "n")) && get(b, "n") >= 3 && coprime(get(b, "p"), get(b, "n")),
            derive: no_derive,
            generate: |l| {
                let mut out = Vec::new();
                for n in odd_upto(3, l.cap(21)) {
                    for p in (1..=n).filter(|p| coprime(*p, n)) {
                        out.push(ParamBinding::new().with("n", n).with("p", p));
                    }
                }
                out
            },
        },
        SuiteCase {
            id: "lemma-easy-ii",
            source: "odd multiples scaled by odd p, n even",
            hypothesis: "n even, p odd, gcd(p, n/2) = 1",
            sweep: "even n in 2..=24, odd p < 2n",
            note: Some("summed from k = 0; starting at k = 1 drops the csc^2(p*pi/n) term"),
            kind: ident("sum(k=0..n/2-1, csc(p*(2*k+1)*pi/n)^2) = n^2/4", &["n", "p"]),
            check: |b| {
                even_n(b) && odd(get(b, "p")) && coprime(get(b, "p"), get(b, "n") / 2)
            },
            derive: no_derive,
            generate: |l| {
                let mut out = Vec::new();
                for n in even_upto(2, l.cap(24)) {
                    for p in odd_upto(1, 2 * n).filter(|p| coprime(*p, n / 2)) {
                        out.push(ParamBinding::new().with("n", n).with("p", p));
                    }
                }
                out
            },
        },
        SuiteCase {
            id: "in-passing",
            source: "full-range cosecant squares scaled by p",
            hypothesis: "gcd(p, n) = 1",
            sweep: "n in 1..=24, p in 1..=n",
            note: None,
            kind: ident("sum(l=1..n-1, csc(p*l*pi/n)^2) = (n^2-1)/3", &["n", "p"]),
            check: |b| get(b, "n") >= 1 && coprime(get(b, "p"), get(b, "n")),
            derive: no_derive,
            generate: |l| {
                let mut out = Vec::new();
                for n in 1..=l.cap(24) {
                    for p in (1..=n).filter(|p| coprime(*p, n)) {
                        out.push(ParamBinding::new().with("n", n).with("p", p));
                    }
                }
                out
            },
        },
        SuiteCase {
            id: "sharp-identity",
            source: "sin x sin y over squared half-sum and half-difference sines",
            hypothesis: "x = a*pi/b, y = c*pi/d with (x+y)/2 and (x-y)/2 not multiples of pi",
            sweep: "50 seeded random (a, b, c, d)",
            note: None,
            kind: ident(
                "sin(a*pi/b)*sin(c*pi/d)/(sin((a*d+c*b)*pi/(2*b*d))^2*sin((a*d-c*b)*pi/(2*b*d))^2) \
                 = 1/sin((a*d-c*b)*pi/(2*b*d))^2 - 1/sin((a*d+c*b)*pi/(2*b*d))^2",
                &["a", "b", "c", "d"],
            ),
            check: |b| {
                let (a, bb, c, d) = (get(b, "a"), get(b, "b"), get(b, "c"), get(b, "d"));
                bb >= 1 && d >= 1 && (a * d + c * bb) % (2 * bb * d) != 0
                    && (a * d - c * bb) % (2 * bb * d) != 0
            },
            derive: no_derive,
            generate: |_| {
                let xs = random_angles(0x5eed_0002, 120);
                xs.chunks(2)
                    .map(|w| {
                        ParamBinding::new()
                            .with("a", w[0].0)
                            .with("b", w[0].1)
                            .with("c", w[1].0)
                            .with("d", w[1].1)
                    })
                    .filter(|b| {
                        let (a, bb, c, d) = (get(b, "a"), get(b, "b"), get(b, "c"), get(b, "d"));
                        (a * d + c * bb) % (2 * bb * d) != 0 && (a * d - c * bb) % (2 * bb * d) != 0
                    })
                    .take(50)
                    .collect()
            },
        },
        SuiteCase {
            id: "revisit-eq07",
            source: "termwise split of the n-odd quotient sum",
            hypothesis: "n odd >= 3, j = 2p even, gcd(j, n) = 1",
            sweep: "odd n in 3..=21, p in 1..=n",
            note: Some("the two sub-sums are bromwich-III and lemma-easy-i"),
            kind: owned(
                format!(
                    "sum(k=0..(n-3)/2, {EQ07_SUMMAND}) = sum(k=0..(n-3)/2, csc((2*k+1)*pi/(2*n))^2) \
                     - sum(k=0..(n-3)/2, csc(p*(2*k+1)*pi/n)^2)"
                ),
                &["n", "j", "p"],
            ),
            check: odd_n_even_j,
            derive: derive_p,
            generate: odd_n_even_j_sweep,
        },
        SuiteCase {
            id: "revisit-eq08",
            source: "termwise split of the n-even quotient sum from k = 1",
            hypothesis: "n even, j = 2 mod 4, p = j/2, gcd(j/2, n/2) = 1",
            sweep: "even n in 2..=24, j = 2 mod 4 up to 2n",
            note: None,
            kind: owned(
                format!(
                    "sum(k=1..n/2-1, {EQ07_SUMMAND}) = sum(k=1..n/2-1, csc((2*k+1)*pi/(2*n))^2) \
                     - sum(k=1..n/2-1, csc(p*(2*k+1)*pi/n)^2)"
                ),
                &["n", "j", "p"],
            ),
            check: with_p,
            derive: derive_p,
            generate: even_n_j2mod4_sweep,
        },
        SuiteCase {
            id: "revisit-eq09",
            source: "termwise split of the k*pi/n quotient sum and its reduction to n/2",
            hypothesis: "n even, j = 2 mod 4, gcd(j/2, n/2) = 1",
            sweep: "even n in 2..=24, j = 2 mod 4 up to 2n",
            note: None,
            kind: ident(
                "sum(k=1..n/2-1, csc(k*pi/n)^2) - sum(k=1..n/2-1, csc((j/2)*k*pi/(n/2))^2) \
                 = (n^2-4)/6 - ((n/2)^2-1)/3",
                &["n", "j"],
            ),
            check: even_n_j2mod4,
            derive: no_derive,
            generate: even_n_j2mod4_sweep,
        },
        SuiteCase {
            id: "revisit-eq10",
            source: "termwise split of the vanishing quotient sum",
            hypothesis: "n odd >= 3, j >= 1, gcd(j, n) = 1",
            sweep: "odd n in 3..=21, j in 1..=2n",
            note: None,
            kind: ident(
                "sum(k=0..(n-3)/2, csc((2*k+1)*pi/n)^2) = sum(k=0..(n-3)/2, csc(j*(2*k+1)*pi/n)^2)",
                &["n", "j"],
            ),
            check: odd_n_coprime_j,
            derive: no_derive,
            generate: odd_n_coprime_j_sweep,
        },
        SuiteCase {
            id: "conj-1",
            source: "closed form behind the -1/2 limit",
            hypothesis: "k >= 1",
            sweep: "k in 1..=30",
            note: None,
            kind: ident(CONJ_1, &["k"]),
            check: |b| get(b, "k") >= 1,
            derive: no_derive,
            generate: |l| one("k", 1..=l.cap(30)),
        },
        SuiteCase {
            id: "conj-2",
            source: "closed form behind the +1/2 limit",
            hypothesis: "k >= 1",
            sweep: "k in 1..=30",
            note: None,
            kind: ident(CONJ_2, &["k"]),
            check: |b| get(b, "k") >= 1,
            derive: no_derive,
            generate: |l| one("k", 1..=l.cap(30)),
        },
        SuiteCase {
            id: "franke",
            source: "Franke's cotangent Dirichlet series, particular case",
            hypothesis: "N >= 3",
            sweep: "N in {3, 4, 5, 6, 10} at 128 bits",
            note: Some("checked by rigorous enclosure: truncated sum plus tail bound"),
            kind: CaseKind::Franke,
            check: |b| get(b, "N") >= 3,
            derive: no_derive,
            generate: |_| one("N", [3, 4, 5, 6, 10]),
        },
        SuiteCase {
            id: "shevelev",
            source: "Shevelev's digit-sum count against the tangent power sum",
            hypothesis: "n odd >= 3, p >= 1, (n-1)^(2p) within the brute-force budget",
            sweep: "(3, 1..5), (5, 1..3), (7, 1..2), (9, 1..2)",
            note: None,
            kind: CaseKind::Shevelev,
            check: |b| odd(get(b, "n")) && get(b, "n") >= 3 && get(b, "p") >= 1,
            derive: no_derive,
            generate: |_| {
                [(3, 5), (5, 3), (7, 2), (9, 2)]
                    .into_iter()
                    .flat_map(|(n, pm)| {
                        (1..=pm).map(move |p| ParamBinding::new().with("n", n).with("p", p))
                    })
                    .collect()
            },
        },
        SuiteCase {
            id: "extra-ident-1",
            source: "alternating ratio sin(2k pi/n)/sin(k pi/n), n odd",
            hypothesis: "n odd >= 3",
            sweep: "odd n in 3..=21",
            note: None,
            kind: ident(
                "sum(k=1..(n-1)/2, (-1)^(k+1)*sin(2*k*pi/n)/sin(k*pi/n)) = 1",
                &["n"],
            ),
            check: |b| odd(get(b, "n")) && get(b, "n") >= 3,
            derive: no_derive,
            generate: |l| one("n", odd_upto(3, l.cap(21))),
        },
        SuiteCase {
            id: "extra-ident-2",
            source: "alternating ratio sin(k pi/n)/sin(2k pi/n), n odd",
            hypothesis: "n odd >= 3, c = chi_o((n-1)/2)",
            sweep: "odd n in 3..=21",
            note: Some("c is the parity indicator of (n-1)/2 and is filled in when omitted"),
            kind: ident(
                "sum(k=1..(n-1)/2, (-1)^(k+1)*sin(k*pi/n)/sin(2*k*pi/n)) \
                 = (-1)^((n+1)/2)*(n-1)/4 + c/2",
                &["n", "c"],
            ),
            check: extra_ident,
            derive: derive_c,
            generate: extra_ident_sweep,
        },
        SuiteCase {
            id: "extra-ident-sec",
            source: "alternating secant sum, n odd",
            hypothesis: "n odd >= 3, c = chi_o((n-1)/2)",
            sweep: "odd n in 3..=21",
            note: None,
            kind: ident(
                "sum(k=1..(n-1)/2, (-1)^(k+1)/cos(k*pi/n)) = (-1)^((n+1)/2)*(n-1)/2 + c",
                &["n", "c"],
            ),
            check: extra_ident,
            derive: derive_c,
            generate: extra_ident_sweep,
        },
        SuiteCase {
            id: "extra-ident-cos",
            source: "alternating cosine sum, n odd",
            hypothesis: "n odd >= 3",
            sweep: "odd n in 3..=21",
            note: None,
            kind: ident("2*sum(k=1..(n-1)/2, (-1)^(k+1)*cos(k*pi/n)) = 1", &["n"]),
            check: |b| odd(get(b, "n")) && get(b, "n") >= 3,
            derive: no_derive,
            generate: |l| one("n", odd_upto(3, l.cap(21))),
        },
    ];
    let constants: [(&'static str, &'static str, &'static str); 6] = [
        (
            "worked-13",
            "ratio identity at n = 13",
            "sin(4*pi/13)/sin(2*pi/13)*sin(6*pi/13)/sin(3*pi/13) \
             - sin(2*pi/13)/sin(pi/13)*sin(3*pi/13)/sin(5*pi/13) \
             - sin(5*pi/13)/sin(4*pi/13)*sin(pi/13)/sin(6*pi/13) = 1",
        ),
        (
            "worked-13-cos",
            "the same value as a cosine product sum",
            "4*cos(2*pi/13)*cos(3*pi/13) - 4*cos(pi/13)*cos(5*pi/13) \
             - 4*cos(4*pi/13)*cos(6*pi/13) = 1",
        ),
        (
            "worked-13-regrouped",
            "regrouped ratio form at n = 13",
            "sin(4*pi/13)/sin(2*pi/13)*sin(2*pi/13)/sin(pi/13) \
             - sin(8*pi/13)/sin(4*pi/13)*sin(4*pi/13)/sin(2*pi/13) \
             - sin(12*pi/13)/sin(6*pi/13)*sin(4*pi/13)/sin(2*pi/13) = 1",
        ),
        (
            "worked-13-disguised",
            "simplified regrouped form at n = 13",
            "sin(4*pi/13)/sin(pi/13) - sin(8*pi/13)/sin(2*pi/13) \
             - sin(pi/13)/sin(6*pi/13)*sin(4*pi/13)/sin(2*pi/13) = 1",
        ),
        (
            "morrie",
            "Morrie's law",
            "cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/8",
        ),
        (
            "heptagon",
            "heptagonal sine-ratio identity",
            "sin(3*pi/7)^2/sin(2*pi/7) - sin(2*pi/7)^2/sin(pi/7) + sin(pi/7)^2/sin(3*pi/7) = 0",
        ),
    ];
    for (id, source, statement) in constants {
        cases.push(SuiteCase {
            id,
            source,
            hypothesis: "none",
            sweep: "single instance",
            note: None,
            kind: ident(statement, &[]),
            check: always,
            derive: no_derive,
            generate: |_| vec![ParamBinding::new()],
        });
    }
    cases.push(SuiteCase {
        id: "gauss-17",
        source: "Gauss's radical expression for cos(pi/17)",
        hypothesis: "none",
        sweep: "single instance, numeric mode",
        note: Some("nested radicals are confirmed to precision, not proved"),
        kind: CaseKind::Identity {
            statement: GAUSS_17.to_string(),
            params: &[],
            mode: Mode::Numeric,
        },
        check: always,
        derive: no_derive,
        generate: |_| vec![ParamBinding::new()],
    });
    cases.push(SuiteCase {
        id: "sin-product",
        source: "sin(n theta) as a product of shifted sines",
        hypothesis: "n >= 1, theta = a*pi/b",
        sweep: "n in 1..=8 with 20 seeded random theta",
        note: None,
        kind: ident(
            "sin(n*a*pi/b) = 2^(n-1)*prod(r=0..n-1, sin(a*pi/b + r*pi/n))",
            &["n", "a", "b"],
        ),
        check: |b| get(b, "n") >= 1 && get(b, "b") >= 1,
        derive: no_derive,
        generate: |l| theta_sweep(l, 0x5eed_0003, |_, _, _| true),
    });
    cases.push(SuiteCase {
        id: "csc2-shift",
        source: "logarithmic-derivative consequence of the sine product",
        hypothesis: "n >= 1, theta = a*pi/b, n*theta not a multiple of pi",
        sweep: "n in 1..=8 with 20 seeded random theta",
        note: None,
        kind: ident(
            "n^2/sin(n*a*pi/b)^2 - 1/sin(a*pi/b)^2 = sum(r=1..n-1, 1/sin(a*pi/b + r*pi/n)^2)",
            &["n", "a", "b"],
        ),
        check: |b| {
            get(b, "n") >= 1 && get(b, "b") >= 1 && (get(b, "n") * get(b, "a")) % get(b, "b") != 0
        },
        derive: no_derive,
        generate: |l| theta_sweep(l, 0x5eed_0004, |n, a, b| (n * a) % b != 0),
    });
    cases
}

fn theta_sweep(l: &SweepLimits, seed: u64, ok: fn(i64, i64, i64) -> bool) -> Vec<ParamBinding> {
    let thetas = random_angles(seed, 400);
    let mut out = Vec::new();
    for n in 1..=l.cap(8) {
        out.extend(
            thetas
                .iter()
                .filter(|(a, b)| ok(n, *a, *b))
                .take(20)
                .map(|&(a, b)| ParamBinding::new().with("n", n).with("a", a).with("b", b)),
        );
    }
    out
}

pub(super) const CONJ_1: &str = "sum(j=0..2*k-1, (-1)^j*sin((2*j+1)*pi/(8*k+2))^2) \
     = -sin(2*k*pi/(4*k+1))^2/(2*cos(pi/(4*k+1)))";

pub(super) const CONJ_2: &str = "sum(j=0..2*k, (-1)^j*sin((2*j+1)*pi/(8*k+6))^2) \
     = 1/2 - cos((2*k+1)*pi/(4*k+3))^2/(2*cos(pi/(4*k+3)))";

pub(super) const GAUSS_17: &str = "cos(pi/17) = (1 - sqrt(17) + sqrt(34 - 2*sqrt(17)) \
     + 2*sqrt(17 + 3*sqrt(17) + sqrt(34 - 2*sqrt(17)) + 2*sqrt(34 + 2*sqrt(17))))/16";
