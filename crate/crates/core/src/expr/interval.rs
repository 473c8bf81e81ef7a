//! Outward-rounded interval arithmetic with dyadic endpoints.
//!
//! Endpoints are rationals of the form `m/2^s`, re-rounded after every
//! operation to `prec` significant bits (lower endpoint down, upper endpoint
//! up), so the true value is always enclosed and endpoint sizes stay bounded.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::rational_to_f64;
use crate::cyclo::PiRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("divisor interval contains zero")]
    DivisorContainsZero,
    #[error("square root of a negative interval")]
    NegativeSqrt,
}

#[derive(Clone, PartialEq, Eq)]
pub struct IntervalReal {
    lo: BigRational,
    hi: BigRational,
    prec: u32,
}

#[derive(Clone, Copy)]
enum Dir {
    Down,
    Up,
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Rounds `x` to `prec` significant bits in direction `dir`.
fn round(x: &BigRational, prec: u32, dir: Dir) -> BigRational {
    if x.is_zero() {
        return x.clone();
    }
    let (n, d) = (x.numer(), x.denom());
    let mag = n.bits() as i64 - d.bits() as i64;
    let s = prec as i64 - mag;
    let scaled = if s >= 0 {
        BigRational::new(n << s as u64, d.clone())
    } else {
        BigRational::new(n.clone(), d << (-s) as u64)
    };
    if scaled.is_integer() {
        return x.clone();
    }
    let m = match dir {
        Dir::Down => scaled.floor().to_integer(),
        Dir::Up => scaled.ceil().to_integer(),
    };
    if s >= 0 {
        BigRational::new(m, pow2(s as u64))
    } else {
        BigRational::from_integer(m << (-s) as u64)
    }
}

impl IntervalReal {
    fn make(lo: BigRational, hi: BigRational, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        IntervalReal {
            lo: round(&lo, prec, Dir::Down),
            hi: round(&hi, prec, Dir::Up),
            prec,
        }
    }

    pub fn from_bounds(lo: BigRational, hi: BigRational, prec: u32) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        Self::make(lo, hi, prec)
    }

    /// Smallest dyadic enclosure of an exact rational.
    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        Self::make(q.clone(), q.clone(), prec)
    }

    pub fn from_int(v: i64, prec: u32) -> Self {
        Self::from_rational(&BigRational::from_integer(v.into()), prec)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// `width < 2^-bits`.
    pub fn width_below_pow2(&self, bits: u32) -> bool {
        self.width() < BigRational::new(BigInt::one(), pow2(bits as u64))
    }

    /// `log2` of the width; `-inf` for a point interval.
    pub fn width_log2(&self) -> f64 {
        let w = self.width();
        if w.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = w.numer().bits() as f64 - w.denom().bits() as f64;
        // refine with the leading mantissa ratio, good to a fraction of a bit
        let shift = (w.numer().bits().max(w.denom().bits())).saturating_sub(60);
        let n = rational_to_f64(&BigRational::new(w.numer() >> shift, BigInt::one()));
        let d = rational_to_f64(&BigRational::new(w.denom() >> shift, BigInt::one()));
        if n > 0.0 && d > 0.0 && n.is_finite() && d.is_finite() {
            (n / d).log2()
        } else {
            bits
        }
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }

    /// Widens by `r` on both sides.
    pub fn inflate(&self, r: &BigRational) -> Self {
        Self::make(&self.lo - r, &self.hi + r, self.prec)
    }

    /// Interval hull of two enclosures.
    pub fn hull(&self, other: &Self) -> Self {
        Self::make(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
            self.prec.max(other.prec),
        )
    }

    pub fn recip(&self) -> Result<Self, IntervalError> {
        if self.contains_zero() {
            return Err(IntervalError::DivisorContainsZero);
        }
        Ok(Self::make(self.hi.recip(), self.lo.recip(), self.prec))
    }

    pub fn div(&self, other: &Self) -> Result<Self, IntervalError> {
        Ok(self * &other.recip()?)
    }

    pub fn powi(&self, e: i64) -> Result<Self, IntervalError> {
        if e < 0 {
            return self.recip()?.powi(-e);
        }
        let e = e as u32;
        if e == 0 {
            return Ok(Self::from_int(1, self.prec));
        }
        let a = num_traits::pow(self.lo.clone(), e as usize);
        let b = num_traits::pow(self.hi.clone(), e as usize);
        let (lo, hi) = if e % 2 == 1 || !self.lo.is_negative() {
            (a, b)
        } else if !self.hi.is_positive() {
            (b, a)
        } else {
            (BigRational::zero(), a.max(b))
        };
        Ok(Self::make(lo, hi, self.prec))
    }

    pub fn sqrt(&self) -> Result<Self, IntervalError> {
        if self.hi.is_negative() {
            return Err(IntervalError::NegativeSqrt);
        }
        let s = self.prec as u64 + 8;
        let scale = BigRational::from_integer(pow2(2 * s));
        let lo = if self.lo.is_positive() {
            (&self.lo * &scale).floor().to_integer().sqrt()
        } else {
            BigInt::zero()
        };
        let hi = (&self.hi * &scale).ceil().to_integer().sqrt() + 1;
        Ok(Self::make(
            BigRational::new(lo, pow2(s)),
            BigRational::new(hi, pow2(s)),
            self.prec,
        ))
    }

    /// Enclosure of π from Machin's formula `π = 16·atan(1/5) − 4·atan(1/239)`.
    pub fn pi(prec: u32) -> Self {
        let bits = prec as u64 + 32;
        let (a5, e5) = atan_inv_fixed(5, bits);
        let (a239, e239) = atan_inv_fixed(239, bits);
        let val = a5 * 16 - a239 * 4;
        let err = BigInt::from(16 * e5 + 4 * e239);
        let s = pow2(bits);
        Self::make(
            BigRational::new(&val - &err, s.clone()),
            BigRational::new(&val + &err, s),
            prec,
        )
    }

    /// Enclosure of `sin(θ)` for `θ = aπ/b`; `pi` is a precomputed π enclosure.
    pub fn sin_pi_rational(theta: PiRational, pi: &IntervalReal) -> Self {
        let r = BigRational::new(theta.num().into(), theta.den().into());
        sin_pi_times(&r, pi)
    }

    pub fn cos_pi_rational(theta: PiRational, pi: &IntervalReal) -> Self {
        let r = BigRational::new(1.into(), 2.into())
            - BigRational::new(theta.num().into(), theta.den().into());
        sin_pi_times(&r, pi)
    }
}

/// `atan(1/x)·2^bits` rounded, together with a bound on the absolute error in
/// units of `2^-bits`.
fn atan_inv_fixed(x: u64, bits: u64) -> (BigInt, u64) {
    let s = pow2(bits);
    let x2 = BigInt::from(x * x);
    let mut power = BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term = &s / (&power * (2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
        k += 1;
    }
    // each truncated term errs by < 1 unit, and the omitted tail is < 1 unit
    (sum, k + 1)
}

/// `sin(r·π)` for rational `r`, reduced to a Taylor series on `[0, π/4]`.
fn sin_pi_times(r: &BigRational, pi: &IntervalReal) -> IntervalReal {
    let two = BigRational::from_integer(2.into());
    let one = BigRational::one();
    let half = BigRational::new(1.into(), 2.into());
    let quarter = BigRational::new(1.into(), 4.into());
    let mut r = r - &two * (r / &two).floor();
    let mut sign = 1;
    if r >= one {
        r -= &one;
        sign = -1;
    }
    if r > half {
        r = &one - &r;
    }
    let v = if r <= quarter {
        taylor(&r, pi, true)
    } else {
        taylor(&(&half - &r), pi, false)
    };
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// Alternating Taylor series of sin (or cos) at `x = r·π`, `0 ≤ r ≤ 1/4`.
/// Terms decrease, so the first omitted term bounds the remainder.
fn taylor(r: &BigRational, pi: &IntervalReal, sine: bool) -> IntervalReal {
    let prec = pi.prec;
    if r.is_zero() {
        return IntervalReal::from_int(if sine { 0 } else { 1 }, prec);
    }
    let x = &IntervalReal::from_rational(r, prec + 16) * pi;
    let x2 = &x * &x;
    let mut term = if sine {
        x.clone()
    } else {
        IntervalReal::from_int(1, prec + 16)
    };
    let mut k: i64 = if sine { 1 } else { 0 };
    let mut sum = IntervalReal::from_int(0, prec + 16);
    let eps = BigRational::new(BigInt::one(), pow2(prec as u64 + 24));
    let mut positive = true;
    loop {
        sum = if positive { &sum + &term } else { &sum - &term };
        positive = !positive;
        let denom = IntervalReal::from_int((k + 1) * (k + 2), prec + 16);
        term = (&term * &x2).div(&denom).expect("positive factorial step");
        k += 2;
        if term.hi < eps {
            break;
        }
    }
    let bound = term.hi.clone();
    let out = sum.inflate(&bound);
    IntervalReal::make(out.lo, out.hi, prec)
}

impl<'a> Add<&'a IntervalReal> for &'a IntervalReal {
    type Output = IntervalReal;
    fn add(self, rhs: &IntervalReal) -> IntervalReal {
        IntervalReal::make(
            &self.lo + &rhs.lo,
            &self.hi + &rhs.hi,
            self.prec.max(rhs.prec),
        )
    }
}

impl<'a> Sub<&'a IntervalReal> for &'a IntervalReal {
    type Output = IntervalReal;
    fn sub(self, rhs: &IntervalReal) -> IntervalReal {
        IntervalReal::make(
            &self.lo - &rhs.hi,
            &self.hi - &rhs.lo,
            self.prec.max(rhs.prec),
        )
    }
}

impl<'a> Mul<&'a IntervalReal> for &'a IntervalReal {
    type Output = IntervalReal;
    fn mul(self, rhs: &IntervalReal) -> IntervalReal {
        let c = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        IntervalReal::make(lo, hi, self.prec.max(rhs.prec))
    }
}

impl Neg for IntervalReal {
    type Output = IntervalReal;
    fn neg(self) -> IntervalReal {
        IntervalReal {
            lo: -self.hi,
            hi: -self.lo,
            prec: self.prec,
        }
    }
}

impl Neg for &IntervalReal {
    type Output = IntervalReal;
    fn neg(self) -> IntervalReal {
        -self.clone()
    }
}

impl fmt::Debug for IntervalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntervalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:.17e}, {:.17e}] (width 2^{:.1}, {} bits)",
            rational_to_f64(&self.lo),
            rational_to_f64(&self.hi),
            self.width_log2(),
            self.prec
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";

    fn decimal(s: &str) -> BigRational {
        let (a, b) = s.split_once('.').unwrap();
        let den = BigInt::from(10).pow(b.len() as u32);
        BigRational::new(format!("{a}{b}").parse::<BigInt>().unwrap(), den)
    }

    #[test]
    fn pi_enclosure() {
        let pi = IntervalReal::pi(200);
        let approx = decimal(PI_50);
        let tol = rat(1, 1) / BigRational::from_integer(BigInt::from(10).pow(49));
        assert!(pi.inflate(&tol).contains(&approx));
        assert!(pi.width_below_pow2(190));
        assert!(!pi.contains(&(approx.clone() + &tol * int(10))));
    }

    #[test]
    fn sin_at_sixth_encloses_half() {
        let pi = IntervalReal::pi(64);
        let s = IntervalReal::sin_pi_rational(PiRational::new(1, 6), &pi);
        assert!(s.contains(&rat(1, 2)));
        assert!(s.width_below_pow2(60));
    }

    #[test]
    fn trig_values_against_f64() {
        let pi = IntervalReal::pi(128);
        for (a, b) in [
            (1, 7),
            (3, 7),
            (-5, 11),
            (13, 6),
            (7, 4),
            (1, 2),
            (0, 1),
            (1, 1),
            (29, 17),
        ] {
            let t = PiRational::new(a, b);
            let s = IntervalReal::sin_pi_rational(t, &pi);
            let c = IntervalReal::cos_pi_rational(t, &pi);
            assert!(
                (s.midpoint_f64() - t.to_f64().sin()).abs() < 1e-14,
                "sin {a}/{b}"
            );
            assert!(
                (c.midpoint_f64() - t.to_f64().cos()).abs() < 1e-14,
                "cos {a}/{b}"
            );
            assert!(s.width_below_pow2(120) && c.width_below_pow2(120));
        }
        assert!(IntervalReal::sin_pi_rational(PiRational::new(1, 1), &pi).contains(&int(0)));
    }

    #[test]
    fn sqrt_and_division() {
        let two = IntervalReal::from_int(2, 128);
        let r = two.sqrt().unwrap();
        assert!((&r * &r).contains(&int(2)));
        assert!(r.width_below_pow2(120));
        let z = IntervalReal::from_bounds(int(-1), int(1), 64);
        assert_eq!(two.div(&z), Err(IntervalError::DivisorContainsZero));
        assert_eq!(
            IntervalReal::from_int(-1, 64).sqrt(),
            Err(IntervalError::NegativeSqrt)
        );
        let third = IntervalReal::from_int(1, 64)
            .div(&IntervalReal::from_int(3, 64))
            .unwrap();
        assert!(third.contains(&rat(1, 3)));
        assert!(!third.contains_zero());
    }

    #[test]
    fn even_power_of_straddling_interval() {
        let x = IntervalReal::from_bounds(int(-2), int(1), 64);
        let sq = x.powi(2).unwrap();
        assert_eq!(sq.lo(), &int(0));
        assert_eq!(sq.hi(), &int(4));
        assert_eq!(x.powi(3).unwrap().lo(), &int(-8));
    }

    #[test]
    fn rounding_is_outward() {
        let q = rat(1, 3);
        for prec in [8, 53, 200] {
            let i = IntervalReal::from_rational(&q, prec);
            assert!(i.lo() < &q && &q < i.hi());
            assert!(i.width_below_pow2(prec - 2));
        }
        // dyadic points stay points
        assert_eq!(IntervalReal::from_rational(&rat(3, 8), 8).width(), int(0));
    }
}
