//! The individual suites. Each returns the number of cases and the failures.

use std::collections::BTreeMap;

use super::oracle::lukasiewicz_value;
use super::random::{Sampler, MAX_DEPTH};
use super::{per_seed, Suite, SuiteFailure, SuiteOptions};
use crate::algebra::{check_adjunction, TNormKind};
use crate::degrees::{degree_corpus, degree_interval, SearchBudget};
use crate::kernel::golden::{
    golden_proofs, graded_derivation, graded_statement, propositional_derivation, propositional_statement,
    PROPOSITIONAL,
};
use crate::kernel::{check_derivation, necessitate, parse_derivation, ConstantSpecification, Derivation};
use crate::lifting::{lift, random_tree_derivation};
use crate::logic::LogicConfig;
use crate::models::{
    crisp_eval, embed_rpl_valuation, find_countermodel, random_model, validate_model, Budget, FittingModel,
    FrameProperty, ModelParams,
};
use crate::syntax::{Formula, Term};
use crate::truth::TruthValue;

type Outcome = (u64, Vec<SuiteFailure>);

const GRID: u64 = 8;

pub(super) fn run(suite: Suite, options: &SuiteOptions) -> Outcome {
    match suite {
        Suite::Adjunction => adjunction(),
        Suite::TNormAxioms => tnorm_axioms(),
        Suite::PropositionalTheorems => propositional_theorems(options),
        Suite::LukasiewiczResiduum => lukasiewicz_residuum(options),
        Suite::GradedTheorems => graded_theorems(options),
        Suite::GradedSemantics => graded_semantics(options),
        Suite::Soundness => soundness(options),
        Suite::Milnikel => milnikel(options),
        Suite::Frames => frames(options),
        Suite::Crisp => crisp(),
        Suite::Conservativity => conservativity(options),
        Suite::Lifting => lifting(options),
        Suite::Degrees => degrees(options),
    }
}

fn merge(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    parts.into_iter().fold((0, Vec::new()), |(n, mut fs), (m, more)| {
        fs.extend(more);
        (n + m, fs)
    })
}

fn values_text(values: &[TruthValue]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// A generated model, or the failure recording that it is not admissible.
fn admissible_model(
    seed: u64,
    params: &ModelParams,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    relevant: &[Formula],
) -> Result<FittingModel, SuiteFailure> {
    let m = random_model(seed, params, config, cs, relevant);
    let report = validate_model(&m, config, cs, relevant);
    if report.passed() {
        Ok(m)
    } else {
        let observed = report.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        Err(SuiteFailure::new(Some(seed), format!("generated {config} model"), "admissible", observed))
    }
}

/// Failure unless `f` is 1 at every world.
fn expect_valid(seed: u64, m: &FittingModel, f: &Formula, label: &str) -> Option<SuiteFailure> {
    let values = m.eval_all(f);
    (!values.iter().all(TruthValue::is_one))
        .then(|| SuiteFailure::new(Some(seed), format!("{label}: {f}"), "1 at every world", values_text(&values)))
}

fn adjunction() -> Outcome {
    merge(TNormKind::ALL.map(|kind| {
        let report = check_adjunction(kind, GRID);
        let failures = report
            .violations
            .iter()
            .map(|v| {
                SuiteFailure::new(
                    None,
                    format!("{kind}: x={}, y={}, z={}", v.x, v.y, v.z),
                    "x*z <= y iff z <= x=>y",
                    "the two sides differ",
                )
            })
            .collect();
        (report.triples_checked as u64, failures)
    }))
}

fn tnorm_axioms() -> Outcome {
    let grid = TruthValue::grid(GRID);
    let (zero, one) = (TruthValue::zero(), TruthValue::one());
    let mut cases = 0;
    let mut failures = Vec::new();
    for kind in TNormKind::ALL {
        let t = |x: &TruthValue, y: &TruthValue| kind.tnorm(x, y);
        for x in &grid {
            cases += 1;
            if t(x, &one) != *x || t(&one, x) != *x || !t(x, &zero).is_zero() {
                failures.push(SuiteFailure::new(
                    None,
                    format!("{kind}: x={x}"),
                    "1 is the unit and 0 absorbs",
                    "violated",
                ));
            }
            for y in &grid {
                cases += 1;
                if t(x, y) != t(y, x) {
                    failures.push(SuiteFailure::new(None, format!("{kind}: x={x}, y={y}"), "commutative", "violated"));
                }
                for z in &grid {
                    cases += 1;
                    if t(&t(x, y), z) != t(x, &t(y, z)) {
                        let inputs = format!("{kind}: x={x}, y={y}, z={z}");
                        failures.push(SuiteFailure::new(None, inputs, "associative", "violated"));
                    }
                    if x <= y && t(x, z) > t(y, z) {
                        let inputs = format!("{kind}: x={x}, y={y}, z={z}");
                        failures.push(SuiteFailure::new(None, inputs, "monotone", "violated"));
                    }
                }
            }
        }
    }
    (cases, failures)
}

/// The shipped reference proofs whose file name starts with `prefix` check
/// and conclude their statement.
fn golden_files(prefix: &str, statement: impl Fn(usize) -> Formula) -> Outcome {
    let proofs: Vec<_> = golden_proofs().into_iter().filter(|g| g.file.starts_with(prefix)).collect();
    let mut failures = Vec::new();
    for (i, g) in proofs.iter().enumerate() {
        let checked = parse_derivation(&g.text, &g.logic)
            .map_err(|e| e.to_string())
            .and_then(|d| check_derivation(&d, &g.logic, &ConstantSpecification::total()).map_err(|e| e.to_string()));
        let expected = statement(i).expand();
        match checked {
            Ok(report) if report.conclusion == expected => {}
            Ok(report) => {
                failures.push(SuiteFailure::new(None, &g.file, expected.to_string(), report.conclusion.to_string()))
            }
            Err(e) => failures.push(SuiteFailure::new(None, &g.file, "accepted", e)),
        }
    }
    (proofs.len() as u64, failures)
}

/// The derivation checks in `config` and concludes `statement`.
fn derivation_proves(
    seed: u64,
    d: &Derivation,
    config: &LogicConfig,
    statement: &Formula,
    label: &str,
) -> Option<SuiteFailure> {
    match check_derivation(d, config, &ConstantSpecification::empty()) {
        Ok(r) if r.conclusion == statement.expand() => None,
        Ok(r) => Some(SuiteFailure::new(Some(seed), label, statement.to_string(), r.conclusion.to_string())),
        Err(e) => Some(SuiteFailure::new(Some(seed), label, "accepted", e.to_string())),
    }
}

fn propositional_theorems(options: &SuiteOptions) -> Outcome {
    let bl = LogicConfig::bl();
    let fs = ["p", "q", "r", "s"].map(Formula::prop);
    let golden = golden_files("bl-", |i| propositional_statement(i, &bl, &fs));
    let config = LogicConfig::blj();
    let cs = ConstantSpecification::empty();
    let random = per_seed(options.seed_range(Suite::PropositionalTheorems), |seed| {
        let mut s = Sampler::new(seed, &config);
        let fs = [0; 4].map(|_| s.formula(2));
        let mut failures = Vec::new();
        let statements: Vec<Formula> =
            (0..PROPOSITIONAL.len()).map(|i| propositional_statement(i, &config, &fs)).collect();
        for (i, statement) in statements.iter().enumerate() {
            let d = propositional_derivation(i, config, &fs);
            failures.extend(derivation_proves(seed, &d, &config, statement, PROPOSITIONAL[i].0));
        }
        match admissible_model(seed, &ModelParams::default(), &config, &cs, &statements) {
            Ok(m) => {
                for (i, statement) in statements.iter().enumerate() {
                    failures.extend(expect_valid(seed, &m, statement, PROPOSITIONAL[i].0));
                }
            }
            Err(e) => failures.push(e),
        }
        failures
    });
    merge([golden, random])
}

fn graded_theorems(options: &SuiteOptions) -> Outcome {
    let (t, a) = (Term::var("x"), Formula::prop("p"));
    let (r, q) = (TruthValue::ratio(1, 3), TruthValue::ratio(2, 3));
    let golden = golden_files("rplj-", |i| graded_statement(i, &t, &a, &r, &q));
    let config = LogicConfig::rplj();
    let cs = ConstantSpecification::empty();
    let random = per_seed(options.seed_range(Suite::GradedTheorems), |seed| {
        let mut s = Sampler::new(seed, &config);
        let (t, a) = (s.term(1), s.formula(2));
        let (r, q) = s.ordered_values();
        let mut failures = Vec::new();
        let statements: Vec<Formula> = (0..8).map(|i| graded_statement(i, &t, &a, &r, &q)).collect();
        for (i, statement) in statements.iter().enumerate() {
            let label = format!("graded theorem {} with t={t}, A={a}, r={r}, q={q}", i + 1);
            match graded_derivation(i, &t, &a, &r, &q) {
                Ok(d) => failures.extend(derivation_proves(seed, &d, &config, statement, &label)),
                Err(e) => failures.push(SuiteFailure::new(Some(seed), label, "a derivation", e.to_string())),
            }
        }
        match admissible_model(seed, &ModelParams::default(), &config, &cs, &statements) {
            Ok(m) => {
                for (i, statement) in statements.iter().enumerate() {
                    failures.extend(expect_valid(seed, &m, statement, &format!("graded theorem {}", i + 1)));
                }
            }
            Err(e) => failures.push(e),
        }
        failures
    });
    merge([golden, random])
}

/// Antitone in the first argument, monotone in the second, and the product
/// inequality, for one assignment.
fn residuum_laws(x: &TruthValue, x2: &TruthValue, y: &TruthValue, y2: &TruthValue) -> Vec<&'static str> {
    let l = TNormKind::Lukasiewicz;
    let mut broken = Vec::new();
    if x <= x2 && l.residuum(x2, y) > l.residuum(x, y) {
        broken.push("antitone in the first argument");
    }
    if y <= y2 && l.residuum(x, y) > l.residuum(x, y2) {
        broken.push("monotone in the second argument");
    }
    let left = l.tnorm(&l.residuum(x, x2), &l.residuum(y, y2));
    if left > l.residuum(&l.tnorm(x, y), &l.tnorm(x2, y2)) {
        broken.push("(x=>x')*(y=>y') <= (x*y)=>(x'*y')");
    }
    broken
}

fn lukasiewicz_residuum(options: &SuiteOptions) -> Outcome {
    let grid = TruthValue::grid(GRID);
    let mut cases = 0;
    let mut failures = Vec::new();
    for x in &grid {
        for x2 in &grid {
            for y in &grid {
                for y2 in &grid {
                    cases += 1;
                    for law in residuum_laws(x, x2, y, y2) {
                        let inputs = format!("x={x}, x'={x2}, y={y}, y'={y2}");
                        failures.push(SuiteFailure::new(None, inputs, law, "violated"));
                    }
                }
            }
        }
    }
    let config = LogicConfig::lj();
    let cs = ConstantSpecification::empty();
    let random = per_seed(options.seed_range(Suite::LukasiewiczResiduum), |seed| {
        let mut s = Sampler::new(seed, &config);
        let [a, a2, b, b2] = [0; 4].map(|_| s.formula(2));
        let product = Formula::imp(
            Formula::conj(Formula::imp(a.clone(), a2.clone()), Formula::imp(b.clone(), b2.clone())),
            Formula::imp(Formula::conj(a.clone(), b.clone()), Formula::conj(a2.clone(), b2.clone())),
        );
        let relevant = vec![a.clone(), a2.clone(), b.clone(), b2.clone(), product.clone()];
        let m = match admissible_model(seed, &ModelParams::default(), &config, &cs, &relevant) {
            Ok(m) => m,
            Err(e) => return vec![e],
        };
        let mut failures: Vec<SuiteFailure> =
            expect_valid(seed, &m, &product, "product inequality").into_iter().collect();
        let [va, va2, vb, vb2] = [&a, &a2, &b, &b2].map(|f| m.eval_all(f));
        for w in 0..m.world_count() {
            for law in residuum_laws(&va[w], &va2[w], &vb[w], &vb2[w]) {
                let inputs = format!("A={a}, A'={a2}, B={b}, B'={b2} at {}", m.world_name(w));
                failures.push(SuiteFailure::new(Some(seed), inputs, law, "violated"));
            }
        }
        failures
    });
    merge([(cases, failures), random])
}

/// The graded forms of `t:A` with grade `r` agree with the value of `t:A`,
/// and the exact form is the minimum of the other two.
fn graded_laws(m: &FittingModel, t: &Term, a: &Formula, r: &TruthValue) -> Vec<String> {
    let v = m.eval_all(&Formula::just(t.clone(), a.clone()));
    let lower = m.eval_all(&Formula::at_least(t.clone(), r.clone(), a.clone()));
    let upper = m.eval_all(&Formula::at_most(t.clone(), r.clone(), a.clone()));
    let exact = m.eval_all(&Formula::exactly(t.clone(), r.clone(), a.clone()));
    let mut broken = Vec::new();
    for w in 0..m.world_count() {
        let at = m.world_name(w);
        if lower[w].is_one() != (v[w] >= *r) {
            broken.push(format!("{at}: t:{{>=r}}A is 1 iff t:A >= r, with t:A = {}, t:{{>=r}}A = {}", v[w], lower[w]));
        }
        if upper[w].is_one() != (v[w] <= *r) {
            broken.push(format!("{at}: t:{{<=r}}A is 1 iff t:A <= r, with t:A = {}, t:{{<=r}}A = {}", v[w], upper[w]));
        }
        if exact[w].is_one() != (v[w] == *r) {
            broken.push(format!("{at}: t:{{==r}}A is 1 iff t:A = r, with t:A = {}, t:{{==r}}A = {}", v[w], exact[w]));
        }
        if exact[w] != lower[w].clone().min(upper[w].clone()) {
            broken.push(format!("{at}: t:{{==r}}A = {} is not the minimum of {} and {}", exact[w], lower[w], upper[w]));
        }
    }
    broken
}

fn graded_semantics(options: &SuiteOptions) -> Outcome {
    let grid = TruthValue::grid(GRID);
    let (t, p) = (Term::var("t"), Formula::prop("p"));
    let mut cases = 0;
    let mut failures = Vec::new();
    for e in &grid {
        let mut m = FittingModel::with_world_count(1, TNormKind::Lukasiewicz).expect("one world");
        m.set_evid(0, &t, &p, e.clone());
        for r in &grid {
            cases += 1;
            for broken in graded_laws(&m, &t, &p, r) {
                failures.push(SuiteFailure::new(None, format!("E(t,p)={e}, r={r}"), broken, "violated"));
            }
        }
    }
    let config = LogicConfig::rplj();
    let cs = ConstantSpecification::total();
    let random = per_seed(options.seed_range(Suite::GradedSemantics), |seed| {
        let mut s = Sampler::new(seed, &config);
        let (t, a, r) = (s.term(1), s.formula(2), s.value());
        let relevant =
            vec![Formula::at_least(t.clone(), r.clone(), a.clone()), Formula::at_most(t.clone(), r.clone(), a.clone())];
        match admissible_model(seed, &ModelParams::default(), &config, &cs, &relevant) {
            Ok(m) => graded_laws(&m, &t, &a, &r)
                .into_iter()
                .map(|b| SuiteFailure::new(Some(seed), format!("t={t}, A={a}, r={r}"), b, "violated"))
                .collect(),
            Err(e) => vec![e],
        }
    });
    merge([(cases, failures), random])
}

/// The logics the soundness suite covers, with the t-norm fixed for BLJ.
fn soundness_variants(options: &SuiteOptions) -> Vec<(LogicConfig, Option<TNormKind>)> {
    let logics = match options.logic {
        Some(config) => vec![config],
        None => vec![LogicConfig::blj(), LogicConfig::lj(), LogicConfig::gj(), LogicConfig::pij(), LogicConfig::rplj()],
    };
    let mut out = Vec::new();
    for config in logics {
        let tnorms = config.allowed_tnorms();
        if tnorms.len() > 1 {
            out.extend(tnorms.iter().map(|t| (config, Some(*t))));
        } else {
            out.push((config, None));
        }
    }
    out
}

fn soundness(options: &SuiteOptions) -> Outcome {
    let cs = ConstantSpecification::total();
    merge(soundness_variants(options).into_iter().map(|(config, tnorm)| {
        let label = match tnorm {
            Some(t) => format!("{config}[{t}]"),
            None => config.to_string(),
        };
        per_seed(options.seed_range(Suite::Soundness), |seed| soundness_case(seed, &config, tnorm, &cs, &label))
    }))
}

/// Every axiom instance and a necessitated instance are 1 everywhere;
/// modus ponens preserves 1 and the fuzzy K inequality holds for random
/// pairs.
fn soundness_case(
    seed: u64,
    config: &LogicConfig,
    tnorm: Option<TNormKind>,
    cs: &ConstantSpecification,
    label: &str,
) -> Vec<SuiteFailure> {
    let mut s = Sampler::new(seed, config);
    let mut instances = s.axiom_instances();
    if config.justified {
        let (_, body) = instances[s.below(instances.len())].clone();
        let c = Term::constant("c1");
        instances.push(("necessitation", necessitate(&c, &body, config.uses_graded_necessitation())));
    }
    let pairs: Vec<(Formula, Formula)> = (0..3).map(|_| (s.formula(2), s.formula(2))).collect();
    let mut relevant: Vec<Formula> = instances.iter().map(|(_, f)| f.clone()).collect();
    relevant.extend(pairs.iter().flat_map(|(a, b)| [a.clone(), Formula::imp(a.clone(), b.clone()), b.clone()]));
    let params = ModelParams { tnorm, ..ModelParams::default() };
    let m = match admissible_model(seed, &params, config, cs, &relevant) {
        Ok(m) => m,
        Err(e) => return vec![e],
    };
    let mut failures = Vec::new();
    for (name, f) in &instances {
        failures.extend(expect_valid(seed, &m, f, &format!("{label} {name}")));
    }
    for (a, b) in &pairs {
        let ab = Formula::imp(a.clone(), b.clone());
        let (va, vab, vb) = (m.eval_all(a), m.eval_all(&ab), m.eval_all(b));
        for w in 0..m.world_count() {
            if va[w].is_one() && vab[w].is_one() && !vb[w].is_one() {
                let inputs = format!("{label} modus ponens A={a}, B={b} at {}", m.world_name(w));
                failures.push(SuiteFailure::new(Some(seed), inputs, "B = 1", vb[w].to_string()));
            }
            let boxed = m.tnorm().tnorm(&m.eval_box_at(w, &ab), &m.eval_box_at(w, a));
            let target = m.eval_box_at(w, b);
            if boxed > target {
                let inputs = format!("{label} box inequality A={a}, B={b} at {}", m.world_name(w));
                failures.push(SuiteFailure::new(Some(seed), inputs, format!("at most {target}"), boxed.to_string()));
            }
        }
    }
    failures
}

fn milnikel(options: &SuiteOptions) -> Outcome {
    let config = LogicConfig::rplj();
    let cs = ConstantSpecification::total();
    per_seed(options.seed_range(Suite::Milnikel), |seed| {
        let mut s = Sampler::new(seed, &config);
        let (st, t) = (s.term(1), s.term(1));
        let (a, b) = (s.formula(2), s.formula(2));
        let (r, r2) = s.ordered_values();
        let q = s.value();
        let l = TNormKind::Lukasiewicz;
        let principles = [
            (
                "application",
                Formula::imp(
                    Formula::at_least(st.clone(), q.clone(), Formula::imp(a.clone(), b.clone())),
                    Formula::imp(
                        Formula::at_least(t.clone(), r.clone(), a.clone()),
                        Formula::at_least(Term::app(st.clone(), t.clone()), l.tnorm(&q, &r), b.clone()),
                    ),
                ),
            ),
            (
                "sum",
                Formula::conj(
                    Formula::imp(
                        Formula::at_least(st.clone(), q.clone(), a.clone()),
                        Formula::at_least(Term::sum(st.clone(), t.clone()), q.clone(), a.clone()),
                    ),
                    Formula::imp(
                        Formula::at_least(st.clone(), q.clone(), a.clone()),
                        Formula::at_least(Term::sum(t.clone(), st.clone()), q.clone(), a.clone()),
                    ),
                ),
            ),
            (
                "grade weakening",
                Formula::imp(Formula::at_least(t.clone(), r2, a.clone()), Formula::at_least(t.clone(), r, a.clone())),
            ),
        ];
        let relevant: Vec<Formula> = principles.iter().map(|(_, f)| f.clone()).collect();
        match admissible_model(seed, &ModelParams::default(), &config, &cs, &relevant) {
            Ok(m) => principles.iter().filter_map(|(name, f)| expect_valid(seed, &m, f, name)).collect(),
            Err(e) => vec![e],
        }
    })
}

/// Justification logics without jT or jD, cycled through by seed.
const FRAME_LOGICS: [LogicConfig; 5] =
    [LogicConfig::blj(), LogicConfig::lj(), LogicConfig::gj(), LogicConfig::pij(), LogicConfig::rplj()];

fn frames(options: &SuiteOptions) -> Outcome {
    let total = ConstantSpecification::total();
    let cs = &total;
    let correspondence = |property: FrameProperty| {
        per_seed(options.seed_range(Suite::Frames), move |seed| {
            let config = options.logic.unwrap_or(FRAME_LOGICS[(seed % 5) as usize]);
            let mut s = Sampler::new(seed, &config);
            let t = s.term(1);
            let (name, f) = match property {
                FrameProperty::Reflexive => {
                    let a = s.formula(2);
                    ("jT", Formula::imp(Formula::just(t, a.clone()), a))
                }
                FrameProperty::Serial => ("jD", Formula::neg(Formula::just(t, Formula::bottom()))),
            };
            let params = ModelParams { frame: vec![property], ..ModelParams::default() };
            let relevant = std::slice::from_ref(&f);
            match admissible_model(seed, &params, &config, cs, relevant) {
                Ok(m) if !property.holds(&m) => {
                    vec![SuiteFailure::new(Some(seed), format!("{config} model"), property.to_string(), "not enforced")]
                }
                Ok(m) => {
                    expect_valid(seed, &m, &f, &format!("{config} {name} on a {property} frame")).into_iter().collect()
                }
                Err(e) => vec![e],
            }
        })
    };
    let budget = Budget { seed: options.seed, ..Budget::default() };
    let refutations =
        [("t:p -> p", FrameProperty::Reflexive), ("~t:#0", FrameProperty::Serial)].map(|(text, property)| {
            let config = LogicConfig::lj();
            let f: Formula = text.parse().expect("suite formula parses");
            let inputs = format!("countermodel to {f} in {config}");
            let failure = match find_countermodel(&f, &config, cs, &budget) {
                None => Some(SuiteFailure::new(None, inputs, "a countermodel", "none within the budget")),
                Some(c) => {
                    let value = c.model.eval(&c.world, &f).expect("the witness world exists");
                    let admissible = validate_model(&c.model, &config, cs, std::slice::from_ref(&f)).passed();
                    (value.is_one() || !admissible || property.holds(&c.model)).then(|| {
                        let observed =
                            format!("value {value}, admissible {admissible}, {property} {}", property.holds(&c.model));
                        SuiteFailure::new(
                            None,
                            inputs,
                            format!("a value below 1 on an admissible non-{property} model"),
                            observed,
                        )
                    })
                }
            };
            (1, failure.into_iter().collect())
        });
    merge(
        [correspondence(FrameProperty::Reflexive), correspondence(FrameProperty::Serial)]
            .into_iter()
            .chain(refutations),
    )
}

/// Formulas over propositions `p`, `q` and terms `x`, `y`.
const CRISP_CORPUS: [&str; 20] = [
    "p",
    "#0",
    "x:p",
    "y:q",
    "x:q",
    "y:(p -> q)",
    "x:y:q",
    "(p & q) -> q",
    "~p \\/ p",
    "x:p -> p",
    "~y:#0",
    "(p -> q) /\\ (q -> p)",
    "p == ~~p",
    "x:(p -> q) -> (y:p -> x.y:q)",
    "x:p -> x+y:p",
    "~(x:p & ~q) -> (p <-> y:q)",
    "(x:p -> y:q) \\/ (y:q -> x:p)",
    "x:~p & p",
    "~~x:q -> x:q",
    "y:{>=1}(p & x:p)",
];

/// Every Boolean model with at most two worlds: all frames, valuations of
/// `p` and `q`, evidence for `x:p` and `y:q`, and default evidence 0 or 1
/// for every other pair.
fn boolean_models(tnorm: TNormKind) -> Vec<FittingModel> {
    let (x, y) = (Term::var("x"), Term::var("y"));
    let (p, q) = (Formula::prop("p"), Formula::prop("q"));
    let bit = |b: bool| if b { TruthValue::one() } else { TruthValue::zero() };
    let mut out = Vec::new();
    for n in 1..=2usize {
        let edges = n * n;
        let per_world = 4;
        for frame in 0u32..(1 << edges) {
            for assignment in 0u32..(1 << (per_world * n)) {
                for default in [false, true] {
                    let mut m = FittingModel::with_world_count(n, tnorm).expect("at least one world");
                    for e in 0..edges {
                        if frame >> e & 1 == 1 {
                            m.add_access(e / n, e % n);
                        }
                    }
                    for w in 0..n {
                        let bits = assignment >> (per_world * w);
                        m.set_val(w, "p", bit(bits & 1 == 1));
                        m.set_val(w, "q", bit(bits & 2 == 2));
                        m.set_evid(w, &x, &p, bit(bits & 4 == 4));
                        m.set_evid(w, &y, &q, bit(bits & 8 == 8));
                    }
                    m.set_default_evid(bit(default));
                    out.push(m);
                }
            }
        }
    }
    out
}

fn crisp() -> Outcome {
    let corpus: Vec<Formula> = CRISP_CORPUS.iter().map(|t| t.parse().expect("corpus formula parses")).collect();
    merge(TNormKind::ALL.map(|tnorm| {
        let models = boolean_models(tnorm);
        let n = models.len() as u64;
        let (cases, failures) = per_seed(0..n, |i| {
            let m = &models[i as usize];
            let mut failures = Vec::new();
            for f in &corpus {
                let fuzzy = m.eval_all(f);
                for (w, value) in fuzzy.iter().enumerate() {
                    let crisp = crisp_eval(m, m.world_name(w), f);
                    let agrees = matches!(&crisp, Ok(b) if value.is_boolean() && *b == value.is_one());
                    if !agrees {
                        let inputs = format!("{tnorm} model {i}, {f} at {}", m.world_name(w));
                        failures.push(SuiteFailure::new(Some(i), inputs, format!("{crisp:?}"), value.to_string()));
                    }
                }
            }
            failures
        });
        (cases * corpus.len() as u64, failures)
    }))
}

fn conservativity(options: &SuiteOptions) -> Outcome {
    let config = LogicConfig::rpl();
    per_seed(options.seed_range(Suite::Conservativity), |seed| {
        let mut s = Sampler::new(seed, &config);
        let f = s.formula(MAX_DEPTH);
        let valuation: BTreeMap<String, TruthValue> = ["p", "q", "r"].map(|p| (p.to_string(), s.value())).into();
        let raw = valuation.iter().map(|(k, v)| (k.clone(), v.as_rational().clone())).collect();
        let expected = lukasiewicz_value(&f, &raw).expect("the formula has no justifications");
        let m = embed_rpl_valuation(valuation.iter().map(|(k, v)| (k.as_str(), v.clone())));
        let direct = m.eval(&f);
        let fitting = m.as_fitting().eval_at(0, &f);
        if *direct.as_rational() == expected && direct == fitting {
            Vec::new()
        } else {
            let inputs = format!("{f} under {valuation:?}");
            vec![SuiteFailure::new(Some(seed), inputs, expected.to_string(), format!("{direct} and {fitting}"))]
        }
    })
}

fn lifting(options: &SuiteOptions) -> Outcome {
    let config = options.logic.unwrap_or(LogicConfig::rplj());
    let cs = ConstantSpecification::total();
    per_seed(options.seed_range(Suite::Lifting), |seed| {
        let d = random_tree_derivation(seed, &config, 6);
        let fail = |expected: &str, observed: String| {
            vec![SuiteFailure::new(
                Some(seed),
                format!("{config} derivation of {}", d.conclusion().expect("non-empty")),
                expected,
                observed,
            )]
        };
        let lifted = match lift(&d, &config, &cs) {
            Ok(l) => l,
            Err(e) => return fail("a lift", e.to_string()),
        };
        let conclusion = d.conclusion().expect("non-empty").clone();
        let expected = necessitate(&lifted.term, &conclusion, config.uses_graded_necessitation());
        if lifted.statement != expected {
            return fail(&expected.to_string(), lifted.statement.to_string());
        }
        match check_derivation(&lifted.derivation, &config, &cs) {
            Ok(r) if r.conclusion == expected => {}
            Ok(r) => return fail(&expected.to_string(), r.conclusion.to_string()),
            Err(e) => return fail("the lifted derivation checks", e.to_string()),
        }
        let hypotheses_lifted = d.hypotheses.iter().zip(&lifted.hypothesis_terms).all(|(h, x)| {
            lifted.derivation.hypotheses.contains(&necessitate(x, h, config.uses_graded_necessitation()))
        });
        if !hypotheses_lifted || lifted.derivation.hypotheses.len() != d.hypotheses.len() {
            return fail("one justified hypothesis per hypothesis", format!("{:?}", lifted.derivation.hypotheses));
        }
        if lifted.term.size() > d.len() {
            return fail(
                &format!("term size at most {}", d.len()),
                format!("{} ({})", lifted.term.size(), lifted.term),
            );
        }
        Vec::new()
    })
}

fn degrees(options: &SuiteOptions) -> Outcome {
    let config = LogicConfig::rplj();
    let cs = ConstantSpecification::total();
    let budget = SearchBudget { seed: options.seed, ..SearchBudget::default() };
    let corpus = degree_corpus();
    let failures = corpus
        .iter()
        .filter_map(|case| {
            let theory: Vec<Formula> = case.theory.iter().map(|t| t.parse().expect("corpus formula parses")).collect();
            let a: Formula = case.target.parse().expect("corpus formula parses");
            let inputs = format!("{:?} |- {}", case.theory, case.target);
            let interval = match degree_interval(&theory, &a, &config, &cs, 4, &budget) {
                Ok(i) => i,
                Err(e) => return Some(SuiteFailure::new(None, inputs, "lower <= upper", e.to_string())),
            };
            let observed = format!("[{}, {}]", interval.lower, interval.upper);
            let graded = Formula::imp(Formula::Const(interval.lower.clone()), a.clone()).expand();
            match check_derivation(&interval.lower_witness, &config, &cs) {
                Ok(r) if r.conclusion == graded => {}
                _ => return Some(SuiteFailure::new(None, inputs, "a checked derivation of the lower bound", observed)),
            }
            if let Some((m, w)) = &interval.upper_witness {
                let mut relevant = theory.clone();
                relevant.push(a.clone());
                let sound = validate_model(m, &config, &cs, &relevant).passed()
                    && theory.iter().all(|h| m.is_valid_in_model(h))
                    && m.eval(w, &a).ok().as_ref() == Some(&interval.upper);
                if !sound {
                    return Some(SuiteFailure::new(
                        None,
                        inputs,
                        "an admissible model of the theory witnessing the upper bound",
                        observed,
                    ));
                }
            }
            let exact: Option<TruthValue> = case.exact.map(|e| e.parse().expect("corpus degree parses"));
            match exact {
                Some(e) if interval.lower != e || interval.upper != e => {
                    Some(SuiteFailure::new(None, inputs, format!("[{e}, {e}]"), observed))
                }
                _ => None,
            }
        })
        .collect();
    (corpus.len() as u64, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(logic: Option<LogicConfig>) -> SuiteOptions {
        SuiteOptions { logic, seed: 3, seeds: Some(12) }
    }

    #[test]
    fn quick_runs_pass() {
        for suite in [
            Suite::PropositionalTheorems,
            Suite::GradedTheorems,
            Suite::Soundness,
            Suite::Milnikel,
            Suite::Conservativity,
            Suite::Lifting,
        ] {
            let (cases, failures) = run(suite, &small(None));
            assert!(cases >= 12, "{suite}");
            assert!(failures.is_empty(), "{suite}: {failures:?}");
        }
        let (_, failures) = run(Suite::Soundness, &small(Some(LogicConfig::rplj().with_jt())));
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn crisp_model_enumeration_is_complete() {
        // One world: 2 frames, 2^4 assignments, 2 defaults. Two worlds:
        // 2^4 frames, 2^8 assignments, 2 defaults.
        assert_eq!(boolean_models(TNormKind::Goedel).len(), 2 * 16 * 2 + 16 * 256 * 2);
    }

    #[test]
    fn soundness_splits_bl_by_tnorm() {
        assert_eq!(soundness_variants(&SuiteOptions::default()).len(), 7);
        assert_eq!(soundness_variants(&small(Some(LogicConfig::gj()))).len(), 1);
    }
}
