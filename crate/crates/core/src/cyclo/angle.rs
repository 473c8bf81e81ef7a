use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;

use super::field::{CycloElem, CycloField};
use super::CycloError;
use crate::algebra::rat;

/// The angle `a·π/b`, kept in lowest terms with `b ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PiRational {
    num: i64,
    den: i64,
}

impl PiRational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "angle denominator must be nonzero");
        let g = num.gcd(&den);
        let s = if den < 0 { -1 } else { 1 };
        PiRational {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    /// Reduced representative in `[0, 2π)`: `(a mod 2b)·π/b`.
    pub fn normalized(self) -> Self {
        PiRational::new(self.num.rem_euclid(2 * self.den), self.den)
    }

    /// `sin` vanishes exactly at integer multiples of π.
    pub fn sin_vanishes(self) -> bool {
        self.den == 1
    }

    /// `cos` vanishes exactly at odd multiples of π/2.
    pub fn cos_vanishes(self) -> bool {
        self.den == 2
    }

    /// Smallest trig-capable conductor containing `e^{iθ}`: `lcm(4, 2b)`.
    pub fn min_conductor(self) -> u64 {
        4u64.lcm(&(2 * self.den as u64))
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 * std::f64::consts::PI / self.den as f64
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (-1, 1) => write!(f, "-pi"),
            (a, 1) => write!(f, "{a}*pi"),
            (1, b) => write!(f, "pi/{b}"),
            (-1, b) => write!(f, "-pi/{b}"),
            (a, b) => write!(f, "{a}*pi/{b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigFn {
    Sin,
    Cos,
    Tan,
    Cot,
    Sec,
    Csc,
}

impl TrigFn {
    pub const ALL: [TrigFn; 6] = [
        TrigFn::Sin,
        TrigFn::Cos,
        TrigFn::Tan,
        TrigFn::Cot,
        TrigFn::Sec,
        TrigFn::Csc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TrigFn::Sin => "sin",
            TrigFn::Cos => "cos",
            TrigFn::Tan => "tan",
            TrigFn::Cot => "cot",
            TrigFn::Sec => "sec",
            TrigFn::Csc => "csc",
        }
    }

    /// True if the function has a pole at `θ`.
    pub fn has_pole_at(self, theta: PiRational) -> bool {
        match self {
            TrigFn::Sin | TrigFn::Cos => false,
            TrigFn::Cot | TrigFn::Csc => theta.sin_vanishes(),
            TrigFn::Tan | TrigFn::Sec => theta.cos_vanishes(),
        }
    }
}

impl fmt::Display for TrigFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrigFn {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        TrigFn::ALL.into_iter().find(|t| t.name() == s).ok_or(())
    }
}

/// Exact value of `func(θ)` in `field` via Euler's formula.
///
/// With `ζ = ζ_M` and `e = a·M/(2b)`: `cos θ = (ζ^e + ζ^{-e})/2` and
/// `sin θ = (ζ^e − ζ^{-e})/(2i) = (ζ^{e+3M/4} − ζ^{-e+3M/4})/2`.
pub fn trig_value(
    func: TrigFn,
    theta: PiRational,
    field: &Arc<CycloField>,
) -> Result<CycloElem, CycloError> {
    let theta = theta.normalized();
    let m = field.conductor().get();
    let need = theta.min_conductor();
    if !m.is_multiple_of(need) {
        return Err(CycloError::InsufficientConductor { need, have: m });
    }
    if func.has_pole_at(theta) {
        return Err(CycloError::Pole { func, angle: theta });
    }
    let e = theta.num() * (m as i64) / (2 * theta.den());
    let quarter = (m / 4) as i64;
    let half = rat(1, 2);
    let sin = || {
        (&CycloElem::zeta_pow(field, e + 3 * quarter)
            - &CycloElem::zeta_pow(field, -e + 3 * quarter))
            .scale(&half)
    };
    let cos = || (&CycloElem::zeta_pow(field, e) + &CycloElem::zeta_pow(field, -e)).scale(&half);
    let v = match func {
        TrigFn::Sin => sin(),
        TrigFn::Cos => cos(),
        TrigFn::Tan => sin().try_div(&cos())?,
        TrigFn::Cot => cos().try_div(&sin())?,
        TrigFn::Sec => cos().inv()?,
        TrigFn::Csc => sin().inv()?,
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn field(m: u64) -> Arc<CycloField> {
        CycloField::for_trig(m).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(PiRational::new(4, -6), PiRational::new(-2, 3));
        assert_eq!(PiRational::new(-2, 3).normalized(), PiRational::new(4, 3));
        assert_eq!(PiRational::new(13, 6).normalized(), PiRational::new(1, 6));
        assert_eq!(PiRational::new(0, 5), PiRational::new(0, 1));
        assert_eq!(PiRational::new(3, 7).min_conductor(), 28);
        assert_eq!(PiRational::new(1, 2).min_conductor(), 4);
        assert_eq!(PiRational::new(2, 9).to_string(), "2*pi/9");
    }

    #[test]
    fn standard_values() {
        let f = field(12);
        let s = trig_value(TrigFn::Sin, PiRational::new(1, 6), &f).unwrap();
        assert_eq!(s.as_rational(), Some(rat(1, 2)));
        let f = field(8);
        let c = trig_value(TrigFn::Csc, PiRational::new(1, 4), &f).unwrap();
        assert_eq!((&c * &c).as_rational(), Some(int(2)));
        let f = field(12);
        let c = trig_value(TrigFn::Csc, PiRational::new(1, 3), &f).unwrap();
        // Ton_1 at n = 1: 2*1*2/3
        assert_eq!((&c * &c).as_rational(), Some(rat(4, 3)));
        let t = trig_value(TrigFn::Tan, PiRational::new(1, 4), &field(8)).unwrap();
        assert_eq!(t.as_rational(), Some(int(1)));
    }

    #[test]
    fn sin_squared_times_csc_squared() {
        let f = field(20);
        let th = PiRational::new(1, 10);
        let s = trig_value(TrigFn::Sin, th, &f).unwrap();
        let c = trig_value(TrigFn::Csc, th, &f).unwrap();
        let s2 = &s * &s;
        assert_eq!(s2.as_rational(), None); // (3 - √5)/8
        assert_eq!((&s2 * &(&c * &c)).as_rational(), Some(int(1)));
    }

    #[test]
    fn poles_and_conductor_errors() {
        let f = field(4);
        assert!(matches!(
            trig_value(TrigFn::Csc, PiRational::new(1, 1), &f),
            Err(CycloError::Pole {
                func: TrigFn::Csc,
                ..
            })
        ));
        assert!(matches!(
            trig_value(TrigFn::Tan, PiRational::new(3, 2), &f),
            Err(CycloError::Pole { .. })
        ));
        assert!(matches!(
            trig_value(TrigFn::Sin, PiRational::new(1, 7), &f),
            Err(CycloError::InsufficientConductor { need: 28, have: 4 })
        ));
    }

    #[test]
    fn morrie_product() {
        let f = field(36);
        let c = |a| trig_value(TrigFn::Cos, PiRational::new(a, 9), &f).unwrap();
        let p = &(&c(1) * &c(2)) * &c(4);
        assert_eq!(p.as_rational(), Some(rat(1, 8)));
        assert_eq!(p.to_string(), "1/8");
    }

    #[test]
    fn pythagoras_twice_at_tenths() {
        let f = field(20);
        let v = |t: TrigFn, a| {
            let x = trig_value(t, PiRational::new(a, 10), &f).unwrap();
            &x * &x
        };
        let total =
            &(&v(TrigFn::Sin, 1) + &v(TrigFn::Sin, 3)) + &(&v(TrigFn::Cos, 1) + &v(TrigFn::Cos, 3));
        assert_eq!(total.as_rational(), Some(int(2)));
    }

    #[test]
    fn fn_names_roundtrip() {
        for t in TrigFn::ALL {
            assert_eq!(t.name().parse::<TrigFn>(), Ok(t));
        }
        assert!("sinh".parse::<TrigFn>().is_err());
    }
}
