use num_rational::BigRational;

use crate::algebra::{factorial, Poly};
use crate::{Scalar, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChebyshevKind {
    /// First kind: `T_m(cos t) = cos(mt)`.
    T,
    /// Second kind: `U_m(cos t) = sin((m+1)t)/sin t`.
    U,
}

/// Cache of `T_m` and `U_m` built by `P_m = 2x·P_{m-1} - P_{m-2}`.
#[derive(Clone, Debug)]
pub struct ChebyshevGen<T: Scalar> {
    t: Vec<Poly<T>>,
    u: Vec<Poly<T>>,
}

impl<T: Scalar> Default for ChebyshevGen<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> ChebyshevGen<T> {
    pub fn new() -> Self {
        let one = Poly::one();
        let x = Poly::x();
        let two_x = Poly::monomial(T::from_i64(2), 1);
        ChebyshevGen {
            t: vec![one.clone(), x],
            u: vec![one, two_x],
        }
    }

    pub fn get(&mut self, kind: ChebyshevKind, m: usize) -> &Poly<T> {
        let seq = match kind {
            ChebyshevKind::T => &mut self.t,
            ChebyshevKind::U => &mut self.u,
        };
        let two_x = Poly::monomial(T::from_i64(2), 1);
        while seq.len() <= m {
            let k = seq.len();
            let next = &(&two_x * &seq[k - 1]) - &seq[k - 2];
            seq.push(next);
        }
        &seq[m]
    }
}

/// `T_m` or `U_m` with coefficients in `T`.
pub fn chebyshev<T: Scalar>(kind: ChebyshevKind, m: usize) -> Poly<T> {
    ChebyshevGen::new().get(kind, m).clone()
}

/// `T_m` from the closed form
/// `(m/2) Σ_k (-1)^k 2^{m-2k} (m-k-1)!/(k!(m-2k)!) x^{m-2k}`.
pub fn chebyshev_t_explicit(m: usize) -> UniPoly {
    if m == 0 {
        return UniPoly::one();
    }
    let mut c = vec![BigRational::from_integer(0.into()); m + 1];
    for k in 0..=m / 2 {
        let num = factorial((m - k - 1) as u64) * (num_bigint::BigInt::from(1) << (m - 2 * k));
        let den = factorial(k as u64) * factorial((m - 2 * k) as u64);
        let mut v = BigRational::new(num, den) * BigRational::new(m.into(), 2.into());
        if k % 2 == 1 {
            v = -v;
        }
        c[m - 2 * k] = v;
    }
    UniPoly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn low_degrees() {
        assert_eq!(
            chebyshev::<BigRational>(ChebyshevKind::T, 2),
            UniPoly::from_i64(&[-1, 0, 2])
        );
        assert_eq!(
            chebyshev::<BigRational>(ChebyshevKind::T, 3),
            UniPoly::from_i64(&[0, -3, 0, 4])
        );
        assert_eq!(
            chebyshev::<BigRational>(ChebyshevKind::U, 2),
            UniPoly::from_i64(&[-1, 0, 4])
        );
    }

    #[test]
    fn recurrence_matches_explicit_formula() {
        let mut g = ChebyshevGen::<BigRational>::new();
        for m in 0..=30 {
            assert_eq!(
                g.get(ChebyshevKind::T, m),
                &chebyshev_t_explicit(m),
                "m = {m}"
            );
        }
    }

    #[test]
    fn values_at_one() {
        let mut g = ChebyshevGen::<BigRational>::new();
        for m in 0..20usize {
            assert_eq!(g.get(ChebyshevKind::T, m).eval(&int(1)), int(1));
            assert_eq!(g.get(ChebyshevKind::U, m).eval(&int(1)), int(m as i64 + 1));
            assert_eq!(g.get(ChebyshevKind::T, m).degree(), Some(m));
        }
    }

    #[test]
    fn float_instance_agrees_with_cosine() {
        let t7: Poly<f64> = chebyshev(ChebyshevKind::T, 7);
        let t = 0.3f64;
        assert!((t7.eval(&t.cos()) - (7.0 * t).cos()).abs() < 1e-12);
        let u6: Poly<f32> = chebyshev(ChebyshevKind::U, 6);
        let v = u6.eval(&(t.cos() as f32));
        assert!((v - ((7.0 * t).sin() / t.sin()) as f32).abs() < 1e-4);
    }
}
