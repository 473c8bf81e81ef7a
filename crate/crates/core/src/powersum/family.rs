use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::chebyshev::{ChebyshevGen, ChebyshevKind};
use super::PowerSumError;
use crate::algebra::{binomial, factorial, rat};
use crate::cyclo::PiRational;
use crate::UniPoly;

/// The eight sum shapes. `T`/`U` picks the Chebyshev kind, `o`/`e` the
/// denominator pattern, `p`/`n` sums of `sin^{2k}` or `csc^{2k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Top,
    Ton,
    Tep,
    Ten,
    Uop,
    Uon,
    Uep,
    Uen,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::Top,
        FamilyId::Ton,
        FamilyId::Tep,
        FamilyId::Ten,
        FamilyId::Uop,
        FamilyId::Uon,
        FamilyId::Uep,
        FamilyId::Uen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Top => "Top",
            FamilyId::Ton => "Ton",
            FamilyId::Tep => "Tep",
            FamilyId::Ten => "Ten",
            FamilyId::Uop => "Uop",
            FamilyId::Uon => "Uon",
            FamilyId::Uep => "Uep",
            FamilyId::Uen => "Uen",
        }
    }

    /// Sums of cosecant powers.
    pub fn is_negative(self) -> bool {
        matches!(
            self,
            FamilyId::Ton | FamilyId::Ten | FamilyId::Uon | FamilyId::Uen
        )
    }

    /// The sine-power family over the same angles.
    pub fn positive(self) -> FamilyId {
        match self {
            FamilyId::Ton => FamilyId::Top,
            FamilyId::Ten => FamilyId::Tep,
            FamilyId::Uon => FamilyId::Uop,
            FamilyId::Uen => FamilyId::Uep,
            p => p,
        }
    }

    /// The cosecant-power family over the same angles.
    pub fn negative(self) -> FamilyId {
        match self {
            FamilyId::Top => FamilyId::Ton,
            FamilyId::Tep => FamilyId::Ten,
            FamilyId::Uop => FamilyId::Uon,
            FamilyId::Uep => FamilyId::Uen,
            p => p,
        }
    }

    /// Number of terms at parameter `n`.
    pub fn term_count(self, n: u64) -> u64 {
        match self.positive() {
            FamilyId::Uop => n.saturating_sub(1),
            _ => n,
        }
    }

    /// The `j`-th angle, `1 <= j <= term_count(n)`.
    pub fn angle(self, n: u64, j: u64) -> PiRational {
        let (n, j) = (n as i64, j as i64);
        match self.positive() {
            FamilyId::Top => PiRational::new(j, 2 * n + 1),
            FamilyId::Tep => PiRational::new(2 * j - 1, 4 * n),
            FamilyId::Uop => PiRational::new(j, 2 * n),
            _ => PiRational::new(2 * j - 1, 4 * n + 2),
        }
    }

    /// Summation as text, e.g. `sum(j=1..n, csc(j*pi/(2*n+1))^(2*k))`.
    pub fn sum_template(self) -> String {
        let (hi, arg) = match self.positive() {
            FamilyId::Top => ("n", "j*pi/(2*n+1)"),
            FamilyId::Tep => ("n", "(2*j-1)*pi/(4*n)"),
            FamilyId::Uop => ("n-1", "j*pi/(2*n)"),
            _ => ("n", "(2*j-1)*pi/(4*n+2)"),
        };
        let f = if self.is_negative() { "csc" } else { "sin" };
        format!("sum(j=1..{hi}, {f}({arg})^(2*k))")
    }

    /// Largest `k` for which the polynomial formula in `n` agrees with the
    /// actual sum at this `n`.
    ///
    /// The cosecant families agree everywhere. For sine powers, the
    /// symmetric-function polynomials stop vanishing past the number of roots
    /// once `k` exceeds twice the root-set size, and the closed forms pick up
    /// aliased terms from `ζ^{2(k-r)} = 1`.
    pub fn max_valid_k(self, n: u64) -> u64 {
        match self {
            FamilyId::Top | FamilyId::Uep => 2 * n,
            FamilyId::Tep | FamilyId::Uop => (2 * n).saturating_sub(1),
            _ => u64::MAX,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = PowerSumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| PowerSumError::UnknownFamily(s.to_string()))
    }
}

/// The polynomial in `x` whose roots are the family's `sin²` values, or
/// their reciprocals for cosecant families.
pub fn defining_poly(family: FamilyId, n: u64) -> Result<UniPoly, PowerSumError> {
    if n == 0 {
        return Err(PowerSumError::InvalidN { family, n });
    }
    let n = n as usize;
    let mut g = ChebyshevGen::<BigRational>::new();
    // (kind, index, parity of the coefficients kept)
    let (kind, m, odd) = match family.positive() {
        FamilyId::Top => (ChebyshevKind::T, 2 * n + 1, true),
        FamilyId::Tep => (ChebyshevKind::T, 2 * n, false),
        FamilyId::Uop => (ChebyshevKind::U, 2 * n - 1, true),
        _ => (ChebyshevKind::U, 2 * n, false),
    };
    let cheb = g.get(kind, m);
    let start = usize::from(odd);
    let p = UniPoly::new(
        cheb.coeffs()
            .iter()
            .skip(start)
            .step_by(2)
            .cloned()
            .collect(),
    );
    // P(√x) has roots cos² of the Chebyshev nodes, the same set as the sin² values
    Ok(if family.is_negative() {
        p.reciprocal()
    } else {
        p
    })
}

/// `a·n + b`.
fn lin(a: i64, b: i64) -> UniPoly {
    UniPoly::linear(
        BigRational::from_integer(b.into()),
        BigRational::from_integer(a.into()),
    )
}

/// `∏_{t=0}^{len-1} (a·n + b + t)` as a polynomial in `n`.
fn rising(a: i64, b: i64, len: i64) -> UniPoly {
    (0..len.max(0)).fold(UniPoly::one(), |acc, t| &acc * &lin(a, b + t))
}

fn pow4(k: u64) -> BigInt {
    BigInt::one() << (2 * k)
}

/// `e_k` of the family's root set as a polynomial in `n`.
pub fn elementary_symmetric(family: FamilyId, k: u64) -> UniPoly {
    if k == 0 {
        return UniPoly::one();
    }
    let ki = k as i64;
    let kf = |m: u64| BigRational::from_integer(factorial(m));
    let inv4k = BigRational::new(BigInt::one(), pow4(k));
    let four_k = BigRational::from_integer(pow4(k));
    let (c, p) = match family {
        // (2n-k)!(2n+1) / (4^k k! (2n-2k+1)!)
        FamilyId::Top => (inv4k / kf(k), &lin(2, 1) * &rising(2, 2 - 2 * ki, ki - 1)),
        // (n+k)! 4^k / ((n-k)! (2k+1)!)
        FamilyId::Ton => (four_k / kf(2 * k + 1), rising(1, 1 - ki, 2 * ki)),
        // 2n (2n-k-1)! / (4^k k! (2n-2k)!)
        FamilyId::Tep => (inv4k / kf(k), &lin(2, 0) * &rising(2, 1 - 2 * ki, ki - 1)),
        // n (n+k-1)! 4^k / ((n-k)! (2k)!)
        FamilyId::Ten => (
            four_k / kf(2 * k),
            &lin(1, 0) * &rising(1, 1 - ki, 2 * ki - 1),
        ),
        // (2n-k-1)! / (4^k k! (2n-2k-1)!)
        FamilyId::Uop => (inv4k / kf(k), rising(2, -2 * ki, ki)),
        // 4^k (n+k)! (n-1)! / ((2k+1)! (n-k-1)! n!)
        FamilyId::Uon => (
            four_k / kf(2 * k + 1),
            &rising(1, -ki, ki) * &rising(1, 1, ki),
        ),
        // (2n-k)! / (4^k k! (2n-2k)!)
        FamilyId::Uep => (inv4k / kf(k), rising(2, 1 - 2 * ki, ki)),
        // (n+k)! 4^k / ((2k)! (n-k)!)
        FamilyId::Uen => (four_k / kf(2 * k), rising(1, 1 - ki, 2 * ki)),
    };
    p.scale(&c)
}

/// `C(2k, k) / 4^k`.
fn central(k: u64) -> BigRational {
    BigRational::new(binomial(2 * k as i64, k as i64).expect("in range"), pow4(k))
}

/// The linear closed forms for sums of `sin^{2k}`.
pub fn closed_form_sin(family: FamilyId, k: u64) -> Result<UniPoly, PowerSumError> {
    if k == 0 {
        return Err(PowerSumError::InvalidK(k));
    }
    let c = central(k);
    let half = rat(1, 2);
    let n = UniPoly::x();
    let n_half = UniPoly::linear(half.clone(), BigRational::one());
    let shift = UniPoly::constant(-half);
    Ok(match family {
        FamilyId::Top => n_half.scale(&c),
        FamilyId::Tep => n.scale(&c),
        FamilyId::Uop => &n.scale(&c) + &shift,
        FamilyId::Uep => &n_half.scale(&c) + &shift,
        other => return Err(PowerSumError::NotSineFamily(other)),
    })
}

/// `e_k` read off `defining_poly` by Vieta at a fixed `n`.
pub fn vieta_coefficient(p: &UniPoly, k: usize) -> BigRational {
    let d = p.degree().unwrap_or(0);
    if k > d {
        return BigRational::zero();
    }
    let v = p.coeff(d - k) / p.leading().expect("nonzero polynomial");
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn at(p: &UniPoly, n: i64) -> BigRational {
        p.eval(&int(n))
    }

    #[test]
    fn lemma_values() {
        assert_eq!(elementary_symmetric(FamilyId::Ton, 1), {
            // 2n(n+1)/3
            UniPoly::from_i64(&[0, 2, 2]).scale(&rat(1, 3))
        });
        for f in FamilyId::ALL {
            assert_eq!(elementary_symmetric(f, 0), UniPoly::one());
        }
        let e2 = elementary_symmetric(FamilyId::Ton, 2);
        let want = rising(1, -1, 4).scale(&rat(16, 120));
        assert_eq!(e2, want);
        // (n+2)(n+1)n(n-1) expands to n^4 + 2n^3 - n^2 - 2n
        assert_eq!(rising(1, -1, 4), UniPoly::from_i64(&[0, -2, -1, 2, 1]));
        let p = defining_poly(FamilyId::Ton, 2).unwrap();
        assert_eq!(vieta_coefficient(&p, 2), at(&e2, 2));
    }

    #[test]
    fn defining_polys_at_one() {
        let ton = defining_poly(FamilyId::Ton, 1).unwrap();
        assert_eq!(ton, UniPoly::from_i64(&[4, -3]));
        let top = defining_poly(FamilyId::Top, 1).unwrap();
        assert_eq!(top, UniPoly::from_i64(&[-3, 4]));
        assert_eq!(vieta_coefficient(&top, 1), rat(3, 4));
        // root of the reciprocal is csc²(π/3)
        assert_eq!(vieta_coefficient(&ton, 1), rat(4, 3));
        let uen = defining_poly(FamilyId::Uen, 1).unwrap();
        assert_eq!(vieta_coefficient(&uen, 1), int(4));
        assert!(defining_poly(FamilyId::Top, 0).is_err());
    }

    #[test]
    fn degrees_of_lemma_polynomials() {
        for k in 1..8 {
            for f in FamilyId::ALL {
                let d = elementary_symmetric(f, k).degree().unwrap() as u64;
                let want = if f.is_negative() { 2 * k } else { k };
                assert_eq!(d, want, "{f} k={k}");
            }
        }
    }

    #[test]
    fn closed_forms() {
        let top1 = closed_form_sin(FamilyId::Top, 1).unwrap();
        assert_eq!(at(&top1, 2), rat(5, 4));
        let uop1 = closed_form_sin(FamilyId::Uop, 1).unwrap();
        assert_eq!(at(&uop1, 1), int(0));
        let top3 = closed_form_sin(FamilyId::Top, 3).unwrap();
        assert_eq!(top3, UniPoly::from_i64(&[1, 2]).scale(&rat(5, 32)));
        assert!(closed_form_sin(FamilyId::Ton, 1).is_err());
    }

    #[test]
    fn names_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
            assert_eq!(f.positive().negative(), f.negative());
        }
        assert!("Tox".parse::<FamilyId>().is_err());
        assert_eq!("ton".parse::<FamilyId>().unwrap(), FamilyId::Ton);
    }
}
