mod common;

use proptest::prelude::*;

use common::*;
use trigsum::expr::{verify, ParamBinding, Verdict, VerifyOptions};
use trigsum::powersum::{family_sum_exact, vieta_crosscheck, FamilyId, PowerSumEngine};
use trigsum::suite::{sweep, SweepLimits};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cyclotomic_field_axioms((m, polys) in field_triple()) {
        field_axioms(m, &polys)?;
    }

    #[test]
    fn pythagorean_identities(theta in angle()) {
        pythagorean(theta)?;
    }

    #[test]
    fn bezout_pairs(p in rational_poly(12), q in rational_poly(12)) {
        bezout(&p, &q)?;
    }

    #[test]
    fn reciprocal_is_an_involution(p in rational_poly(15)) {
        reciprocal_involution(&p)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn printed_trees_parse_back(e in expr_tree()) {
        parse_round_trip(&e)?;
    }
}

fn trig_term() -> impl Strategy<Value = String> {
    (
        prop::sample::select(vec!["sin", "cos", "tan", "csc"]),
        1i64..12,
        1i64..13,
        1i64..4,
    )
        .prop_map(|(f, a, b, e)| format!("{f}({a}*pi/{b})^{e}"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    // exact and numeric verdicts agree; equality is reflexive and symmetric
    #[test]
    fn verifier_modes_agree(a in trig_term(), b in trig_term()) {
        let (ea, eb) = (trigsum::expr::parse(&a).unwrap(), trigsum::expr::parse(&b).unwrap());
        let binding = ParamBinding::new();
        let exact = VerifyOptions::exact();
        let Ok(ab) = verify(&ea, &eb, &binding, &exact) else {
            // a pole: numeric mode must not confirm it either
            let num = verify(&ea, &eb, &binding, &VerifyOptions::numeric(128));
            prop_assert!(num.map_or(true, |r| r.verdict != Verdict::ConfirmedToPrecision));
            return Ok(());
        };
        let ba = verify(&eb, &ea, &binding, &exact).unwrap();
        prop_assert_eq!(ab.verdict, ba.verdict);
        prop_assert_eq!(verify(&ea, &ea, &binding, &exact).unwrap().verdict, Verdict::Proved);
        let num = verify(&ea, &eb, &binding, &VerifyOptions::numeric(128)).unwrap();
        let expected = if ab.verdict == Verdict::Proved {
            Verdict::ConfirmedToPrecision
        } else {
            Verdict::Refuted
        };
        prop_assert_eq!(num.verdict, expected);
    }

    #[test]
    fn power_sums_match_term_by_term(fi in 0usize..8, k in 1u64..6, n in 1u64..9) {
        let family = FamilyId::ALL[fi];
        prop_assume!(k <= family.max_valid_k(n));
        let f = PowerSumEngine::global().power_sum(family, k).unwrap();
        prop_assert_eq!(f.eval(n as i64), family_sum_exact(family, k, n).unwrap());
    }
}

#[test]
fn binomial_sum_identity_to_200() {
    binomial_identity(200).unwrap();
}

#[test]
fn vieta_agrees_with_symmetric_functions() {
    for family in FamilyId::ALL {
        for n in 1..=10u64 {
            let r = vieta_crosscheck(family, n, n).unwrap();
            assert!(r.is_ok(), "{r:?}");
        }
    }
}

#[test]
fn sine_product_formula_instances() {
    for id in ["sin-product", "csc2-shift"] {
        let r = sweep(id, &SweepLimits::default()).unwrap();
        assert!(r.ok() && r.passed >= 100, "{r}");
    }
}
