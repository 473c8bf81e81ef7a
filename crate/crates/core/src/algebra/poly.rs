use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

use super::AlgebraError;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Result of the extended Euclidean algorithm: `s*p + t*q = g`, `g` monic.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtGcd<T> {
    pub g: Poly<T>,
    pub s: Poly<T>,
    pub t: Poly<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `a + b*x`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q*quot + rem` with `deg(rem) < deg(q)`.
    pub fn divrem(&self, q: &Self) -> Result<(Self, Self), AlgebraError> {
        let dq = q.degree().ok_or(AlgebraError::ZeroPolynomialDivisor)?;
        let lc = q.coeffs[dq].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dq {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dq];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dq].clone();
            if top.is_zero() {
                continue;
            }
            let c = top / lc.clone();
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * qc.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dq);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, q: &Self) -> Result<Self, AlgebraError> {
        self.divrem(q).map(|(_, r)| r)
    }

    /// Extended Euclid. Returns the monic gcd together with a Bézout pair.
    pub fn ext_gcd(p: &Self, q: &Self) -> Result<ExtGcd<T>, AlgebraError> {
        if p.is_zero() && q.is_zero() {
            return Err(AlgebraError::GcdOfZeros);
        }
        let (mut r0, mut r1) = (p.clone(), q.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&quot * &s1);
            let t2 = &t0 - &(&quot * &t1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = T::one() / r0.leading().expect("nonzero remainder").clone();
        Ok(ExtGcd {
            g: r0.scale(&inv),
            s: s0.scale(&inv),
            t: t0.scale(&inv),
        })
    }

    /// `x^d * p(1/x)` where `d = deg p`.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![T::zero(); shift];
        c.extend(self.coeffs.iter().cloned());
        Poly { coeffs: c }
    }
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// Renders with `x` as the variable; see [`Poly::display_in`] for others.
impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl<T: Scalar + fmt::Display> Poly<T> {
    /// Plain-text rendering, highest degree first: `3*n^2 - 1/2*n + 4`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag == "1";
            match d {
                0 => out.push_str(&mag),
                _ => {
                    if !unit {
                        out.push_str(&mag);
                        out.push('*');
                    }
                    out.push_str(var);
                    if d > 1 {
                        out.push('^');
                        out.push_str(&d.to_string());
                    }
                }
            }
        }
        out
    }
}
