use std::collections::BTreeMap;

use fjl_core::algebra::TNormKind;
use fjl_core::harness::lukasiewicz_value;
use fjl_core::kernel::{check_derivation, parse_derivation, ConstantSpecification};
use fjl_core::lifting::{lift, random_tree_derivation};
use fjl_core::models::{crisp_eval, random_model, validate_model, FittingModel, ModelParams};
use fjl_core::{Formula, LogicConfig, Term, TruthValue};
use proptest::prelude::*;

fn value() -> impl Strategy<Value = TruthValue> {
    (1i64..=60).prop_flat_map(|d| (0..=d, Just(d))).prop_map(|(n, d)| TruthValue::ratio(n, d))
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::var("x")),
        Just(Term::var("y")),
        Just(Term::constant("c1")),
        Just(Term::constant("c2")),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Term::app(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Term::sum(l, r)),
        ]
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::prop("p")),
        Just(Formula::prop("q")),
        Just(Formula::prop("r")),
        value().prop_map(Formula::constant),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::conj(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::weak_conj(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::weak_disj(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::equiv(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::biimpl(a, b)),
            inner.clone().prop_map(Formula::neg),
            (term(), inner.clone()).prop_map(|(t, a)| Formula::just(t, a)),
            (term(), value(), inner.clone()).prop_map(|(t, r, a)| Formula::at_least(t, r, a)),
            (term(), value(), inner.clone()).prop_map(|(t, r, a)| Formula::at_most(t, r, a)),
            (term(), value(), inner).prop_map(|(t, r, a)| Formula::exactly(t, r, a)),
        ]
    })
}

fn justification_free() -> impl Strategy<Value = Formula> {
    formula().prop_filter("no justification terms", |f| !f.has_justification())
}

fn tnorm() -> impl Strategy<Value = TNormKind> {
    prop_oneof![Just(TNormKind::Lukasiewicz), Just(TNormKind::Goedel), Just(TNormKind::Product)]
}

fn justified_logic() -> impl Strategy<Value = LogicConfig> {
    prop_oneof![
        Just(LogicConfig::blj()),
        Just(LogicConfig::lj()),
        Just(LogicConfig::gj()),
        Just(LogicConfig::pij()),
        Just(LogicConfig::rplj()),
        Just(LogicConfig::lj().with_jt()),
        Just(LogicConfig::gj().with_jd()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printing_round_trips(f in formula()) {
        let text = f.to_string();
        let back: Formula = text.parse().unwrap();
        prop_assert_eq!(&back, &f, "{}", text);
    }

    #[test]
    fn expansion_is_idempotent_and_primitive(f in formula()) {
        let e = f.expand();
        prop_assert!(e.is_primitive());
        prop_assert_eq!(e.expand(), e);
    }

    #[test]
    fn tnorm_laws_off_the_grid(kind in tnorm(), x in value(), y in value(), z in value()) {
        let t = |a: &TruthValue, b: &TruthValue| kind.tnorm(a, b);
        prop_assert_eq!(t(&x, &y), t(&y, &x));
        prop_assert_eq!(t(&t(&x, &y), &z), t(&x, &t(&y, &z)));
        prop_assert_eq!(t(&x, &TruthValue::one()), x.clone());
        if x <= y {
            prop_assert!(t(&x, &z) <= t(&y, &z));
        }
        prop_assert_eq!(t(&x, &z) <= y, z <= kind.residuum(&x, &y));
        prop_assert_eq!(kind.residuum(&x, &y).is_one(), x <= y);
    }

    #[test]
    fn model_and_oracle_agree_without_justifications(f in justification_free(), p in value(), q in value(), r in value()) {
        let mut m = FittingModel::with_world_count(1, TNormKind::Lukasiewicz).unwrap();
        let mut valuation = BTreeMap::new();
        for (name, v) in [("p", p), ("q", q), ("r", r)] {
            valuation.insert(name.to_string(), v.as_rational().clone());
            m.set_val(0, name, v);
        }
        let expected = lukasiewicz_value(&f, &valuation).unwrap();
        prop_assert_eq!(m.eval_at(0, &f).into_rational(), expected);
    }

    #[test]
    fn sugar_does_not_change_values(seed in 0u64..10_000, f in formula(), kind in tnorm()) {
        let relevant = [f.clone()];
        let params = ModelParams { tnorm: Some(kind), ..ModelParams::default() };
        let m = random_model(seed, &params, &LogicConfig::blj(), &ConstantSpecification::empty(), &relevant);
        prop_assert_eq!(m.eval_all(&f), m.eval_all(&f.expand()));
    }

    #[test]
    fn generated_models_are_admissible(seed in 0u64..100_000, config in justified_logic(), f in formula(), g in formula()) {
        let cs = ConstantSpecification::total();
        let relevant = [f, g];
        let m = random_model(seed, &ModelParams::default(), &config, &cs, &relevant);
        let report = validate_model(&m, &config, &cs, &relevant);
        prop_assert!(report.passed(), "{:?}", report.violations);
        prop_assert!(config.allowed_tnorms().contains(&m.tnorm()));
        prop_assert_eq!(&m, &random_model(seed, &ModelParams::default(), &config, &cs, &relevant));
    }

    #[test]
    fn model_files_round_trip(seed in 0u64..100_000, f in formula()) {
        let relevant = [f.clone()];
        let m = random_model(seed, &ModelParams::default(), &LogicConfig::rplj(), &ConstantSpecification::total(), &relevant);
        let back = FittingModel::from_json(&m.to_json()).unwrap();
        prop_assert_eq!(back.eval_all(&f), m.eval_all(&f));
        prop_assert_eq!(back.to_json(), m.to_json());
    }

    #[test]
    fn boolean_models_agree_with_the_crisp_evaluator(seed in 0u64..100_000, f in formula(), kind in tnorm()) {
        let f = crisp_only(&f);
        let relevant = [f.clone()];
        let params = ModelParams { tnorm: Some(kind), ..ModelParams::default() };
        let m = random_model(seed, &params, &LogicConfig::j(), &ConstantSpecification::total(), &relevant);
        prop_assert!(m.is_boolean());
        for (w, v) in m.eval_all(&f).iter().enumerate() {
            prop_assert_eq!(crisp_eval(&m, m.world_name(w), &f).unwrap(), v.is_one());
        }
    }

    #[test]
    fn box_inequality_in_admissible_models(seed in 0u64..100_000, a in formula(), b in formula()) {
        let config = LogicConfig::lj();
        let relevant = [a.clone(), b.clone()];
        let m = random_model(seed, &ModelParams::default(), &config, &ConstantSpecification::total(), &relevant);
        let ab = Formula::imp(a.clone(), b.clone());
        for w in 0..m.world_count() {
            let left = m.tnorm().tnorm(&m.eval_box_at(w, &ab), &m.eval_box_at(w, &a));
            prop_assert!(left <= m.eval_box_at(w, &b));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn lifted_derivations_recheck(seed in 0u64..1_000_000, config in justified_logic(), depth in 0usize..5) {
        let cs = ConstantSpecification::total();
        let d = random_tree_derivation(seed, &config, depth);
        prop_assert!(check_derivation(&d, &config, &cs).is_ok());
        let lifted = lift(&d, &config, &cs).unwrap();
        let report = check_derivation(&lifted.derivation, &config, &cs).unwrap();
        prop_assert_eq!(&report.conclusion, &lifted.statement);
        prop_assert!(lifted.term.size() <= d.len());
        let reparsed = parse_derivation(&lifted.derivation.to_string(), &config).unwrap();
        prop_assert_eq!(reparsed, lifted.derivation);
    }
}

/// Replaces rational constants other than 0 and 1 so the formula is
/// two-valued on Boolean models.
fn crisp_only(f: &Formula) -> Formula {
    match f.expand() {
        Formula::Const(r) if !r.is_boolean() => Formula::bottom(),
        Formula::Const(r) => Formula::Const(r),
        Formula::Prop(p) => Formula::Prop(p),
        Formula::StrongConj(a, b) => Formula::conj(crisp_only(&a), crisp_only(&b)),
        Formula::Implies(a, b) => Formula::imp(crisp_only(&a), crisp_only(&b)),
        Formula::Justified(t, a) => Formula::just(t, crisp_only(&a)),
        other => unreachable!("expanded formulas are primitive: {other}"),
    }
}
