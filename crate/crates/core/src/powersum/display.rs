use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::UniPoly;

/// `content · (n+1)^a · n^b · (n-1)^c · rest`, with `rest` a primitive
/// integer polynomial with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub content: BigRational,
    pub n_plus_one: u32,
    pub n: u32,
    pub n_minus_one: u32,
    pub rest: UniPoly,
}

fn strip(p: &mut UniPoly, f: &UniPoly) -> u32 {
    let mut count = 0;
    while p.degree().unwrap_or(0) > 0 {
        let (q, r) = p.divrem(f).expect("nonzero divisor");
        if !r.is_zero() {
            break;
        }
        *p = q;
        count += 1;
    }
    count
}

/// Splits off content and the linear factors `n+1`, `n`, `n-1`.
/// Returns `None` for the zero polynomial.
pub fn factor_linear(p: &UniPoly) -> Option<Factored> {
    if p.is_zero() {
        return None;
    }
    let mut rest = p.clone();
    let n_plus_one = strip(&mut rest, &UniPoly::from_i64(&[1, 1]));
    let n = strip(&mut rest, &UniPoly::from_i64(&[0, 1]));
    let n_minus_one = strip(&mut rest, &UniPoly::from_i64(&[-1, 1]));
    let den = rest
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = rest.coeffs().iter().fold(BigInt::zero(), |acc, c| {
        acc.gcd(&(c.numer() * (&den / c.denom())))
    });
    let mut content = BigRational::new(num, den);
    if rest.leading().expect("nonzero").is_negative() {
        content = -content;
    }
    let rest = rest.scale(&content.recip());
    Some(Factored {
        content,
        n_plus_one,
        n,
        n_minus_one,
        rest,
    })
}

fn power(base: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(base.to_string()),
        _ => Some(format!("{base}^{e}")),
    }
}

impl Factored {
    fn factor_strings(&self, rest: String) -> Vec<String> {
        let mut out: Vec<String> = [
            power("(n+1)", self.n_plus_one),
            power("n", self.n),
            power("(n-1)", self.n_minus_one),
        ]
        .into_iter()
        .flatten()
        .collect();
        if !is_one(&self.rest) {
            out.push(format!("({rest})"));
        }
        out
    }

    /// Plain text in the expression grammar, e.g. `2*(n+1)*n/3`.
    pub fn text(&self) -> String {
        let factors = self.factor_strings(self.rest.display_in("n"));
        let num = self.content.numer().abs();
        let den = self.content.denom();
        let mut s = String::new();
        if self.content.is_negative() {
            s.push('-');
        }
        let mut parts = Vec::new();
        if !num.is_one() || factors.is_empty() {
            parts.push(num.to_string());
        }
        parts.extend(factors);
        s.push_str(&parts.join("*"));
        if !den.is_one() {
            s.push('/');
            s.push_str(&den.to_string());
        }
        s
    }

    /// LaTeX-style rendering.
    pub fn typeset(&self) -> String {
        let factors = self.factor_strings(self.rest.display_in("n").replace('*', " "));
        let num = self.content.numer().abs();
        let mut parts = Vec::new();
        if !num.is_one() || factors.is_empty() {
            parts.push(num.to_string());
        }
        parts.extend(factors);
        let body = brace_exponents(&parts.join(" "));
        let sign = if self.content.is_negative() { "-" } else { "" };
        if self.content.denom().is_one() {
            format!("{sign}{body}")
        } else {
            format!("{sign}\\frac{{{body}}}{{{}}}", self.content.denom())
        }
    }
}

/// `n^12` becomes `n^{12}`.
fn brace_exponents(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

fn is_one(p: &UniPoly) -> bool {
    p.degree() == Some(0) && p.coeff(0).is_one()
}

/// Factored text form, or `"0"`.
pub fn factored_display(p: &UniPoly) -> String {
    factor_linear(p).map_or_else(|| "0".to_string(), |f| f.text())
}
