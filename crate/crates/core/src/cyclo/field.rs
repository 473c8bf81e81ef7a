use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclotomic::{cyclotomic_polynomial, totient};
use super::CycloError;
use crate::UniPoly;

/// Order `M` of the generating root of unity `ζ_M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conductor(u64);

impl Conductor {
    pub fn new(m: u64) -> Result<Self, CycloError> {
        if m == 0 {
            return Err(CycloError::InvalidConductor(m));
        }
        Ok(Conductor(m))
    }

    /// A conductor usable for trig embeddings: `4 | m`, so `i = ζ^{m/4}` exists.
    pub fn for_trig(m: u64) -> Result<Self, CycloError> {
        if m < 4 || !m.is_multiple_of(4) {
            return Err(CycloError::InvalidConductor(m));
        }
        Ok(Conductor(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn lcm(self, other: u64) -> Self {
        Conductor(self.0.lcm(&other))
    }
}

impl fmt::Display for Conductor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `ℚ(ζ_M) = ℚ[z]/Φ_M(z)`.
#[derive(Debug)]
pub struct CycloField {
    conductor: Conductor,
    modulus: UniPoly,
    degree: usize,
    // nonzero non-leading coefficients of Φ_M as (index, value)
    tail: Vec<(usize, i64)>,
}

impl CycloField {
    pub fn new(conductor: Conductor) -> Arc<Self> {
        let modulus = cyclotomic_polynomial(conductor.get());
        let degree = totient(conductor.get()) as usize;
        debug_assert_eq!(modulus.degree(), Some(degree));
        let tail = modulus.coeffs()[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let v = c
                    .to_integer()
                    .to_i64()
                    .expect("cyclotomic coefficients are small");
                (i, v)
            })
            .collect();
        Arc::new(CycloField {
            conductor,
            modulus,
            degree,
            tail,
        })
    }

    /// Convenience for `CycloField::new(Conductor::for_trig(m)?)`.
    pub fn for_trig(m: u64) -> Result<Arc<Self>, CycloError> {
        Ok(Self::new(Conductor::for_trig(m)?))
    }

    pub fn conductor(&self) -> Conductor {
        self.conductor
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    /// `φ(M)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    fn same(&self, other: &CycloField) -> bool {
        self.conductor == other.conductor
    }

    /// In-place reduction of an integer coefficient vector modulo `Φ_M`.
    fn reduce_int(&self, v: &mut Vec<BigInt>) {
        let d = self.degree;
        for i in (d..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for &(j, m) in &self.tail {
                let slot = &mut v[i - d + j];
                match m {
                    1 => *slot -= &c,
                    -1 => *slot += &c,
                    _ => *slot -= &c * m,
                }
            }
        }
        v.truncate(d);
    }

    fn reduce(&self, p: &UniPoly) -> UniPoly {
        if p.coeffs().len() <= self.degree {
            return p.clone();
        }
        let (ints, den) = to_integer_form(p);
        let mut ints = ints;
        self.reduce_int(&mut ints);
        from_integer_form(ints, &den)
    }
}

/// Clears denominators: `p = ints / den`.
fn to_integer_form(p: &UniPoly) -> (Vec<BigInt>, BigInt) {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (ints, den)
}

fn from_integer_form(ints: Vec<BigInt>, den: &BigInt) -> UniPoly {
    UniPoly::new(
        ints.into_iter()
            .map(|n| BigRational::new(n, den.clone()))
            .collect(),
    )
}

/// An element of a cyclotomic field, stored reduced (degree `< φ(M)`).
#[derive(Clone)]
pub struct CycloElem {
    field: Arc<CycloField>,
    coeffs: UniPoly,
}

impl CycloElem {
    /// Reduces an arbitrary polynomial in `ζ_M` into the field.
    pub fn from_poly(field: &Arc<CycloField>, p: &UniPoly) -> Self {
        CycloElem {
            field: field.clone(),
            coeffs: field.reduce(p),
        }
    }

    pub fn rational(field: &Arc<CycloField>, q: BigRational) -> Self {
        CycloElem {
            field: field.clone(),
            coeffs: UniPoly::constant(q),
        }
    }

    pub fn zero(field: &Arc<CycloField>) -> Self {
        Self::rational(field, BigRational::zero())
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::rational(field, BigRational::one())
    }

    /// `ζ_M^e` for any integer `e`.
    pub fn zeta_pow(field: &Arc<CycloField>, e: i64) -> Self {
        let m = field.conductor.get() as i64;
        let e = e.rem_euclid(m) as usize;
        Self::from_poly(field, &UniPoly::monomial(BigRational::one(), e))
    }

    /// `i = ζ_M^{M/4}`; requires `4 | M`.
    pub fn imaginary_unit(field: &Arc<CycloField>) -> Result<Self, CycloError> {
        let m = field.conductor.get();
        if !m.is_multiple_of(4) {
            return Err(CycloError::InvalidConductor(m));
        }
        Ok(Self::zeta_pow(field, (m / 4) as i64))
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Coefficients in the power basis `1, ζ, …, ζ^{φ(M)-1}`.
    pub fn coeffs(&self) -> &UniPoly {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// The rational value if every positive-degree coefficient vanishes.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.coeffs.coeff(0)),
            Some(_) => None,
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), CycloError> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(CycloError::MixedConductors(
                self.field.conductor.get(),
                other.field.conductor.get(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_same(other)?;
        Ok(self.with(&self.coeffs + &other.coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_same(other)?;
        Ok(self.with(&self.coeffs - &other.coeffs))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        if let Some(q) = self.as_rational() {
            return Ok(other.scale(&q));
        }
        if let Some(q) = other.as_rational() {
            return Ok(self.scale(&q));
        }
        let (a, da) = to_integer_form(&self.coeffs);
        let (b, db) = to_integer_form(&other.coeffs);
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.field.reduce_int(&mut prod);
        Ok(self.with(from_integer_form(prod, &(da * db))))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_same(other)?;
        self.try_mul(&other.inv()?)
    }

    /// Multiplicative inverse via extended Euclid against `Φ_M`.
    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::rational(&self.field, q.recip()));
        }
        let e = UniPoly::ext_gcd(&self.coeffs, &self.field.modulus).expect("nonzero operands");
        // Φ_M is irreducible, so the gcd with a nonzero reduced element is 1
        debug_assert!(e.g.degree() == Some(0));
        Ok(Self::from_poly(&self.field, &e.s))
    }

    /// Integer power; negative exponents go through [`inv`](Self::inv).
    pub fn pow(&self, e: i64) -> Result<Self, CycloError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        self.with(self.coeffs.scale(q))
    }

    /// Image under `ζ_M ↦ ζ_{M'}^{M'/M}`.
    pub fn lift(&self, target: &Arc<CycloField>) -> Result<Self, CycloError> {
        let m = self.field.conductor.get();
        let big = target.conductor.get();
        if !big.is_multiple_of(m) {
            return Err(CycloError::NonDivisibleConductor { from: m, to: big });
        }
        let step = (big / m) as usize;
        let mut c = vec![BigRational::zero(); (self.coeffs.coeffs().len().max(1) - 1) * step + 1];
        for (j, a) in self.coeffs.coeffs().iter().enumerate() {
            c[j * step] = a.clone();
        }
        Ok(Self::from_poly(target, &UniPoly::new(c)))
    }

    fn with(&self, coeffs: UniPoly) -> Self {
        debug_assert!(coeffs.coeffs().len() <= self.field.degree);
        CycloElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem[M={}]({})", self.field.conductor, self)
    }
}

/// Rationals print as `p/q`; otherwise a polynomial in `ζ_M`.
impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => {
                let var = format!("z{}", self.field.conductor);
                write!(f, "{}", self.coeffs.display_in(&var))
            }
        }
    }
}

// Operator sugar for same-field operands. Panics on mixed conductors;
// use the `try_*` methods when operands may come from different fields.
macro_rules! field_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a CycloElem> for &'a CycloElem {
            type Output = CycloElem;
            fn $m(self, rhs: &CycloElem) -> CycloElem {
                self.$try(rhs)
                    .expect("operands from the same cyclotomic field")
            }
        }
        impl $tr<CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $m(self, rhs: CycloElem) -> CycloElem {
                (&self).$m(&rhs)
            }
        }
    };
}
field_op!(Add, add, try_add);
field_op!(Sub, sub, try_sub);
field_op!(Mul, mul, try_mul);

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        self.with(-&self.coeffs)
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic.
pub fn elem_arith(u: &CycloElem, v: &CycloElem, op: FieldOp) -> Result<CycloElem, CycloError> {
    match op {
        FieldOp::Add => u.try_add(v),
        FieldOp::Sub => u.try_sub(v),
        FieldOp::Mul => u.try_mul(v),
        FieldOp::Div => u.try_div(v),
    }
}
