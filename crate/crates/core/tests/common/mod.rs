//! Strategies and property bodies shared by the property suite and the
//! acceptance run.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use trigsum::algebra::{binomial, rat};
use trigsum::cyclo::{trig_value, CycloElem, CycloField, PiRational, TrigFn};
use trigsum::expr::{parse, BinOp, Expr, Indexed};
use trigsum::{BigInteger, BigRational, UniPoly};

pub const FIELD_CONDUCTORS: [u64; 5] = [4, 12, 20, 28, 36];

pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(a, b)| rat(a, b))
}

pub fn rational_poly(max_degree: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 0..=max_degree + 1).prop_map(UniPoly::new)
}

/// A conductor from [`FIELD_CONDUCTORS`] with three elements of its field,
/// given as coefficient lists reduced on construction.
pub fn field_triple() -> impl Strategy<Value = (u64, [UniPoly; 3])> {
    prop::sample::select(FIELD_CONDUCTORS.to_vec()).prop_flat_map(|m| {
        let p = || rational_poly(m as usize);
        (Just(m), [p(), p(), p()])
    })
}

pub fn field_axioms(m: u64, polys: &[UniPoly; 3]) -> Result<(), TestCaseError> {
    let field = CycloField::for_trig(m).unwrap();
    let [u, v, w] = polys.each_ref().map(|p| CycloElem::from_poly(&field, p));
    prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    prop_assert_eq!(&(&u + &v) + &w, &u + &(&v + &w));
    prop_assert_eq!(&u * &v, &v * &u);
    prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
    prop_assert_eq!(&(&u + &v) - &v, u.clone());
    prop_assert_eq!(&u + &(-&u), CycloElem::zero(&field));
    if !u.is_zero() {
        prop_assert_eq!(&u * &u.inv().unwrap(), CycloElem::one(&field));
        prop_assert_eq!(u.try_div(&u).unwrap(), CycloElem::one(&field));
    }
    Ok(())
}

pub fn angle() -> impl Strategy<Value = PiRational> {
    (-60i64..=60, 1i64..=30).prop_map(|(a, b)| PiRational::new(a, b))
}

pub fn pythagorean(theta: PiRational) -> Result<(), TestCaseError> {
    let field = CycloField::for_trig(theta.min_conductor()).unwrap();
    let s = trig_value(TrigFn::Sin, theta, &field).unwrap();
    let c = trig_value(TrigFn::Cos, theta, &field).unwrap();
    let one = CycloElem::one(&field);
    prop_assert_eq!(&(&s * &s) + &(&c * &c), one.clone());
    if !theta.cos_vanishes() {
        let t = trig_value(TrigFn::Tan, theta, &field).unwrap();
        let sec = trig_value(TrigFn::Sec, theta, &field).unwrap();
        prop_assert_eq!(&one + &(&t * &t), &sec * &sec);
    }
    if !theta.sin_vanishes() {
        let cot = trig_value(TrigFn::Cot, theta, &field).unwrap();
        let csc = trig_value(TrigFn::Csc, theta, &field).unwrap();
        prop_assert_eq!(&one + &(&cot * &cot), &csc * &csc);
    }
    Ok(())
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..50).prop_map(Expr::int),
        (0i64..20, 2i64..9).prop_map(|(a, b)| Expr::num(rat(a, b))),
        Just(Expr::pi()),
        prop::sample::select(vec!["n", "m", "x1"]).prop_map(Expr::var),
    ]
}

fn exponent() -> impl Strategy<Value = Expr> {
    let atom = prop_oneof![
        (0i64..12).prop_map(Expr::int),
        prop::sample::select(vec!["n", "k"]).prop_map(Expr::var),
    ];
    atom.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| -e),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::binary(BinOp::Add, a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::binary(BinOp::Mul, a, b)),
        ]
    })
}

fn compound(inner: BoxedStrategy<Expr>) -> impl Strategy<Value = Expr> {
    prop_oneof![
        (prop::sample::select(TrigFn::ALL.to_vec()), inner.clone())
            .prop_map(|(f, a)| Expr::trig(f, a)),
        inner.clone().prop_map(Expr::sqrt),
        inner.clone().prop_map(|e| -e),
        (
            prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div]),
            inner.clone(),
            inner.clone()
        )
            .prop_map(|(op, l, r)| Expr::binary(op, l, r)),
        (inner, exponent()).prop_map(|(b, e)| Expr::pow(b, e)),
    ]
}

/// Random trees in the shape the parser produces: nonnegative literals,
/// integer-valued exponents, no nested rebinding of an index.
pub fn expr_tree() -> impl Strategy<Value = Expr> {
    let body = leaf()
        .boxed()
        .prop_union(Just(Expr::var("j")).boxed())
        .prop_recursive(3, 16, 2, |inner| compound(inner.boxed()));
    let indexed = (
        prop::sample::select(vec![Indexed::Sum, Indexed::Prod]),
        leaf(),
        leaf(),
        body,
    )
        .prop_map(|(op, lo, hi, b)| Expr::indexed(op, "j", lo, hi, b));
    leaf()
        .boxed()
        .prop_union(indexed.boxed())
        .prop_recursive(4, 24, 2, |inner| compound(inner.boxed()))
}

pub fn parse_round_trip(e: &Expr) -> Result<(), TestCaseError> {
    let text = e.to_string();
    let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
    prop_assert_eq!(&back, e, "text: {}", text);
    prop_assert_eq!(back.to_string(), text);
    Ok(())
}

pub fn bezout(p: &UniPoly, q: &UniPoly) -> Result<(), TestCaseError> {
    if p.is_zero() && q.is_zero() {
        return Ok(());
    }
    let r = UniPoly::ext_gcd(p, q).unwrap();
    prop_assert_eq!(&(&r.s * p) + &(&r.t * q), r.g.clone());
    prop_assert_eq!(r.g.leading().cloned(), Some(rat(1, 1)));
    prop_assert!(p.rem(&r.g).unwrap().is_zero());
    prop_assert!(q.rem(&r.g).unwrap().is_zero());
    Ok(())
}

pub fn reciprocal_involution(p: &UniPoly) -> Result<(), TestCaseError> {
    if p.is_zero() || p.coeff(0) == rat(0, 1) {
        return Ok(());
    }
    prop_assert_eq!(p.reciprocal().reciprocal(), p.clone());
    Ok(())
}

/// `Σ_{r<k} (-1)^r C(2k,r) = (-1)^{k+1} C(2k,k) / 2`, checked for `1..=k_max`.
pub fn binomial_identity(k_max: i64) -> Result<(), String> {
    for k in 1..=k_max {
        let lhs: BigInteger = (0..k)
            .map(|r| {
                let c = binomial(2 * k, r).unwrap();
                if r % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum();
        let mut rhs = binomial(2 * k, k).unwrap();
        if k % 2 == 0 {
            rhs = -rhs;
        }
        if BigInteger::from(2) * &lhs != rhs {
            return Err(format!("k = {k}: {lhs} vs {rhs}/2"));
        }
    }
    Ok(())
}
