use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// `num / den` in canonical form. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Exact rational arithmetic with a checked quotient.
pub fn rat_arith(
    a: &BigRational,
    b: &BigRational,
    op: ArithOp,
) -> Result<BigRational, AlgebraError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            a / b
        }
    })
}

/// `m!` by incremental products.
pub fn factorial(m: u64) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// Exact binomial coefficient `C(m, r)`.
pub fn binomial(m: i64, r: i64) -> Result<BigInt, AlgebraError> {
    if r < 0 || r > m {
        return Err(AlgebraError::BinomialOutOfRange { m, r });
    }
    let r = r.min(m - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        // acc = C(m, i) on entry, and C(m, i) * (m - i) is divisible by i + 1
        acc = acc * (m - i) / (i + 1);
    }
    Ok(acc)
}

/// Parses `"p"` or `"p/q"` (optional leading sign) into a canonical rational.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::InvalidRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Nearest `f64`; saturates to infinity for very large values.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    // scale both parts down to keep the quotient representable
    let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
    let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fraction_arithmetic() {
        assert_eq!(
            rat_arith(&rat(1, 3), &rat(1, 6), ArithOp::Add).unwrap(),
            rat(1, 2)
        );
        let z = rat_arith(&rat(2, 3), &int(0), ArithOp::Mul).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(
            rat_arith(&int(1), &int(0), ArithOp::Div),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn ton2_at_one_needs_exact_cancellation() {
        // Ton_2 at n = 1: csc^4(pi/3) = (4/3)^2; the e_2 correction term vanishes.
        let n = 1;
        let e2_term = rat(4, 45) * int(2 * 3 * (n - 1));
        let got = rat_arith(&rat(16, 9), &e2_term, ArithOp::Sub).unwrap();
        assert_eq!(got, rat(16, 9));
        assert_eq!(got, rat(4, 3) * rat(4, 3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(binomial(6, 3).unwrap(), BigInt::from(20));
        assert_eq!(binomial(0, 0).unwrap(), BigInt::from(1));
        assert!(binomial(3, 4).is_err());
        assert!(binomial(3, -1).is_err());
        // alternating partial row sum at k = 3 by direct summation
        let k = 3;
        let s: i64 = (0..k)
            .map(|r| {
                let c = binomial(2 * k, r).unwrap().to_i64().unwrap();
                if r % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum();
        // 1 - 6 + 15; agrees with (1/2)(-1)^(k+1) C(2k, k)
        assert_eq!(s, 10);
        assert_eq!(binomial(2 * k, k).unwrap().to_i64().unwrap() / 2, s);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
        assert_eq!(int(0).to_string(), "0");
    }

    #[test]
    fn to_f64_handles_huge_parts() {
        let big = BigRational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(399));
        assert!((rational_to_f64(&big) - 10.0).abs() < 1e-12);
        assert_eq!(rational_to_f64(&rat(1, 4)), 0.25);
    }
}
