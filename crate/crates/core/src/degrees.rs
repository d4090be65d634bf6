//! Certified bounds on the degree of a formula over a theory in RPL and
//! RPLJ.
//!
//! The lower bound `r` comes with a checked derivation of `#r -> A` from the
//! theory, so `r` is at most the provability degree. The upper bound `u`
//! comes with an admissible model of the theory in which `A` takes value
//! `u` at some world, so `u` is at least the truth degree. By soundness the
//! first never exceeds the second.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::TNormKind;
use crate::kernel::{axiom_instance_of, ConstantSpecification, Derivation, Line, ProofBuilder, SumSide};
use crate::logic::{Base, LogicConfig};
use crate::models::{
    random_model, relevant_closure, repair_evidence, validate_model, Budget, Constraint, EvidenceKey, FittingModel,
    ModelParams,
};
use crate::syntax::{Formula, Term};
use crate::truth::{Rational, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("degrees need truth constants; {0} has none")]
    NoTruthConstants(String),
    #[error("lower bound {lower} exceeds upper bound {upper}")]
    Inconsistent { lower: TruthValue, upper: TruthValue },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBound {
    pub value: TruthValue,
    /// Derivation of `#value -> A` from the theory.
    pub derivation: Derivation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub value: TruthValue,
    /// A model of the theory and a world where `A` has value `value`.
    pub witness: Option<(FittingModel, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeInterval {
    pub lower: TruthValue,
    pub upper: TruthValue,
    pub lower_witness: Derivation,
    pub upper_witness: Option<(FittingModel, String)>,
}

/// The JSON form of a degree computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub formula: String,
    pub lower: TruthValue,
    pub upper: TruthValue,
    pub lower_witness_file: Option<String>,
    pub upper_witness_file: Option<String>,
}

fn require_constants(config: &LogicConfig) -> Result<(), DegreeError> {
    if config.base == Base::Pavelka {
        Ok(())
    } else {
        Err(DegreeError::NoTruthConstants(config.name()))
    }
}

fn subformulas(fs: &[Formula]) -> Vec<Formula> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for f in fs {
        f.expand().visit(&mut |g| {
            if seen.insert(g.clone()) {
                out.push(g.clone());
            }
        });
    }
    out
}

fn grade_product(r: &TruthValue, q: &TruthValue) -> TruthValue {
    TNormKind::Lukasiewicz.tnorm(r, q)
}

/// Graded facts `#r -> X`, one per formula with the best grade found.
struct Chainer {
    builder: ProofBuilder,
    facts: HashMap<Formula, (TruthValue, Line)>,
    order: Vec<Formula>,
}

impl Chainer {
    fn grade(&self, f: &Formula) -> Option<&TruthValue> {
        self.facts.get(f).map(|(r, _)| r)
    }

    fn improves(&self, f: &Formula, r: &TruthValue) -> bool {
        !r.is_zero() && self.grade(f).is_none_or(|old| r > old)
    }

    fn record(&mut self, f: &Formula, line: Line) -> bool {
        let r = match self.builder.formula(line).as_implication() {
            Some((Formula::Const(r), x)) if x == f => r.clone(),
            _ => panic!("graded facts are lines #r -> X"),
        };
        if !self.improves(f, &r) {
            return false;
        }
        if self.facts.insert(f.clone(), (r, line)).is_none() {
            self.order.push(f.clone());
        }
        true
    }

    fn line(&self, f: &Formula) -> Line {
        self.facts[f].1
    }

    fn snapshot(&self) -> Vec<(Formula, TruthValue, Line)> {
        self.order.iter().map(|f| (f.clone(), self.facts[f].0.clone(), self.facts[f].1)).collect()
    }
}

/// Forward chaining from the theory, axiom instances, truth constants and
/// constant specification entries, closing under graded modus ponens, its
/// justified form, monotonicity of sums, conjunction introduction and
/// elimination, weakening and ex falso for `depth` rounds. Always succeeds,
/// with `#0 -> A` as the fallback.
pub fn provability_degree_lb(
    theory: &[Formula],
    a: &Formula,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    depth: usize,
) -> Result<LowerBound, DegreeError> {
    require_constants(config)?;
    let target = a.expand();
    let theory: Vec<Formula> = theory.iter().map(Formula::expand).collect();
    let mut all = theory.clone();
    all.push(target.clone());
    let universe = subformulas(&all);
    let in_universe: BTreeSet<&Formula> = universe.iter().collect();
    let mut c = Chainer {
        builder: ProofBuilder::with_hypotheses(*config, theory.clone()),
        facts: HashMap::new(),
        order: Vec::new(),
    };
    let built =
        |r: Result<Line, crate::kernel::BuildError>| r.expect("forward-chaining rules are applied to matching shapes");

    for h in &theory {
        let line = c.builder.hyp(h);
        if let Some((Formula::Const(_), x)) = h.as_implication() {
            c.record(&x.clone(), line);
        }
        let graded = built(c.builder.graded_one(line));
        c.record(h, graded);
    }
    for s in &universe {
        if c.grade(s).is_some_and(TruthValue::is_one) {
            continue;
        }
        if let Some(m) = axiom_instance_of(s, config) {
            let line = c.builder.axiom(m.scheme, &m.substitution);
            let graded = built(c.builder.graded_one(line));
            c.record(s, graded);
        } else if let Formula::Const(q) = s {
            if !q.is_zero() {
                let line = c.builder.identity(s);
                c.record(s, line);
            }
        } else if let Some((k, body)) = s.as_justified() {
            if config.justified && cs.justifies(k, body, config) {
                let entry = c.builder.necessitate(k, body);
                let line = built(if config.uses_graded_necessitation() {
                    c.builder.exact_to_at_least(entry)
                } else {
                    c.builder.graded_one(entry)
                });
                c.record(s, line);
            }
        }
    }

    for _ in 0..depth {
        let mut changed = false;
        let facts = c.snapshot();
        for (f, r, line) in &facts {
            let Some((x, y)) = f.as_implication() else { continue };
            if let Some((q, minor)) = c.facts.get(x).cloned() {
                if c.improves(y, &grade_product(r, &q)) {
                    let out = built(c.builder.gmp(*line, minor));
                    changed |= c.record(&y.clone(), out);
                }
            }
        }
        for (f, r, line) in &facts {
            let Some((s, body)) = f.as_justified() else { continue };
            if let Some((x, y)) = body.as_implication() {
                for (g, q, minor) in &facts {
                    let Some((t, x2)) = g.as_justified() else { continue };
                    let goal = Formula::just(Term::app(s.clone(), t.clone()), y.clone());
                    if x2 == x && in_universe.contains(&goal) && c.improves(&goal, &grade_product(r, q)) {
                        let out = built(c.builder.jgmp(*line, *minor));
                        changed |= c.record(&goal, out);
                    }
                }
            }
            for u in &universe {
                let Some((Term::Sum(left, right), body2)) = u.as_justified() else { continue };
                if body2 != body || !c.improves(u, r) {
                    continue;
                }
                let out = if **left == *s {
                    c.builder.mon(*line, right, SumSide::Right)
                } else if **right == *s {
                    c.builder.mon(*line, left, SumSide::Left)
                } else {
                    continue;
                };
                changed |= c.record(u, built(out));
            }
        }
        for u in &universe {
            if let Some((x, y)) = u.as_conjunction() {
                if let (Some(r), Some(q)) = (c.grade(x).cloned(), c.grade(y).cloned()) {
                    if c.improves(u, &grade_product(&r, &q)) {
                        let out = built(c.builder.graded_conj(c.line(x), c.line(y)));
                        changed |= c.record(u, out);
                    }
                }
            }
            let Some((x, y)) = u.as_implication() else { continue };
            if let (Formula::Const(r), Some(s)) = (x, c.grade(y).cloned()) {
                if s >= *r && c.improves(u, &TruthValue::one()) {
                    let lowered = built(c.builder.lower_grade(c.line(y), r));
                    let out = built(c.builder.graded_one(lowered));
                    changed |= c.record(u, out);
                    continue;
                }
            }
            if let Some(s) = c.grade(y).cloned() {
                if c.improves(u, &s) {
                    let k = c.builder.weaken_thm(y, x);
                    let out = built(c.builder.syllogism(c.line(y), k));
                    changed |= c.record(u, out);
                }
            }
            // From a graded negation `~X`, any `X -> Y` by ex falso.
            let negation = Formula::neg(x.clone()).expand();
            if let Some(s) = c.grade(&negation).cloned() {
                if c.improves(u, &s) {
                    let falsum = c.builder.bl7(y);
                    let out = built(c.builder.post_compose_inner(c.line(&negation), falsum));
                    changed |= c.record(u, out);
                }
            }
        }
        for (f, r, line) in &facts {
            let Some((x, y)) = f.as_conjunction() else { continue };
            if c.improves(x, r) {
                let left = c.builder.bl2(x, y);
                let out = built(c.builder.syllogism(*line, left));
                changed |= c.record(&x.clone(), out);
            }
            if c.improves(y, r) {
                let swap = c.builder.bl3(x, y);
                let swapped = built(c.builder.syllogism(*line, swap));
                let left = c.builder.bl2(y, x);
                let out = built(c.builder.syllogism(swapped, left));
                changed |= c.record(&y.clone(), out);
            }
        }
        if !changed {
            break;
        }
    }

    let line = match c.facts.get(&target) {
        Some((_, line)) => *line,
        None => c.builder.bl7(&target),
    };
    let derivation = c.builder.into_derivation(line);
    let value = match derivation.conclusion().and_then(Formula::as_implication) {
        Some((Formula::Const(r), _)) => r.clone(),
        _ => unreachable!("lower-bound witnesses are graded formulas"),
    };
    Ok(LowerBound { value, derivation })
}

/// Search limits for upper bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_worlds: usize,
    pub max_denominator: u64,
    /// Independent hill-climbing runs; each starts from a fresh random model.
    pub restarts: u64,
    /// Passes over all coordinates per run.
    pub sweeps: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_worlds: 3, max_denominator: 12, restarts: 16, sweeps: 6, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Score {
    /// Total shortfall of the theory below 1 over all worlds.
    deficit: Rational,
    value: TruthValue,
    tiebreak: Rational,
}

#[derive(Debug, Clone, Copy)]
enum Coordinate {
    Val(usize, usize),
    Evid(usize, usize),
    Edge(usize, usize),
}

struct Climber<'a> {
    theory: &'a [Formula],
    target: &'a Formula,
    config: &'a LogicConfig,
    cs: &'a ConstantSpecification,
    relevant: Vec<Formula>,
    /// Prefer low (`1`) or high (`-1`) values on ties.
    direction: i64,
}

impl Climber<'_> {
    fn score(&self, m: &FittingModel) -> Score {
        let mut deficit = Rational::from_integer(0.into());
        for h in self.theory {
            for v in m.eval_all(h) {
                deficit += TruthValue::one().as_rational() - v.as_rational();
            }
        }
        let value = m.eval_all(self.target).into_iter().min().expect("models have worlds");
        let mut tiebreak = Rational::from_integer(0.into());
        for w in 0..m.world_count() {
            tiebreak += m.val_entries(w).map(|(_, v)| v.as_rational().clone()).sum::<Rational>();
            tiebreak += m.evid_entries(w).map(|(_, v)| v.as_rational().clone()).sum::<Rational>();
        }
        Score { deficit, value, tiebreak: tiebreak * Rational::from_integer(self.direction.into()) }
    }

    fn admissible(&self, m: &FittingModel) -> bool {
        validate_model(m, self.config, self.cs, &self.relevant).passed()
    }

    /// Models differing from `m` in one coordinate. Evidence
    /// changes are followed by a repair of the evidence conditions.
    fn moves<'p>(
        &'p self,
        m: &'p FittingModel,
        coord: Coordinate,
        props: &'p [String],
        keys: &'p [EvidenceKey],
        pool: &'p [TruthValue],
    ) -> Box<dyn Iterator<Item = FittingModel> + 'p> {
        match coord {
            Coordinate::Edge(w, v) => {
                let mut next = m.clone();
                if m.has_access(w, v) {
                    next.remove_access(w, v);
                } else {
                    next.add_access(w, v);
                }
                Box::new(std::iter::once(next))
            }
            Coordinate::Val(w, i) => {
                let current = m.val(w, &props[i]);
                Box::new(pool.iter().filter(move |v| **v != current).map(move |v| {
                    let mut next = m.clone();
                    next.set_val(w, &props[i], v.clone());
                    next
                }))
            }
            Coordinate::Evid(w, i) => {
                let current = m.evid_key(w, &keys[i]);
                Box::new(pool.iter().filter(move |v| **v != current).map(move |v| {
                    let mut next = m.clone();
                    next.set_evid_key(w, keys[i].clone(), v.clone());
                    repair_evidence(&mut next, self.config, self.cs, &self.relevant);
                    next
                }))
            }
        }
    }

    /// The relevant pairs and the premises of conditions concluding them;
    /// other tabled keys only move through repair.
    fn evidence_coordinates(&self, m: &FittingModel) -> Vec<EvidenceKey> {
        let relevant: BTreeSet<EvidenceKey> = self.relevant.iter().flat_map(|f| f.justified_pairs()).collect();
        let mut keys = relevant.clone();
        for c in relevant_closure(m, self.config, self.cs, &self.relevant).constraints {
            if relevant.contains(c.conclusion()) {
                match c {
                    Constraint::Application { major, minor, .. } => keys.extend([major, minor]),
                    Constraint::Sum { part, .. } => {
                        keys.insert(part);
                    }
                }
            }
        }
        keys.into_iter().collect()
    }

    fn climb(&self, mut m: FittingModel, pool: &[TruthValue], sweeps: usize) -> (FittingModel, Score) {
        let props: Vec<String> = self
            .relevant
            .iter()
            .flat_map(|f| f.props())
            .map(|p| p.to_string())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let keys = if self.config.justified { self.evidence_coordinates(&m) } else { Vec::new() };
        let mut coords = Vec::new();
        for w in 0..m.world_count() {
            coords.extend((0..props.len()).map(|i| Coordinate::Val(w, i)));
            coords.extend((0..keys.len()).map(|i| Coordinate::Evid(w, i)));
            coords.extend((0..m.world_count()).map(|v| Coordinate::Edge(w, v)));
        }
        let mut best = self.score(&m);
        for _ in 0..sweeps {
            let mut improved = false;
            for &coord in &coords {
                let mut found: Option<(FittingModel, Score)> = None;
                for next in self.moves(&m, coord, &props, &keys, pool) {
                    let score = self.score(&next);
                    let bar = found.as_ref().map_or(&best, |(_, s)| s);
                    if score < *bar && (matches!(coord, Coordinate::Val(..)) || self.admissible(&next)) {
                        found = Some((next, score));
                    }
                }
                if let Some((next, score)) = found {
                    best = score;
                    m = next;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        (m, best)
    }
}

/// Candidate values: the grid, the truth constants of the formulas and
/// their Łukasiewicz combinations.
fn value_pool(fs: &[Formula], max_denominator: u64, crisp: bool) -> Vec<TruthValue> {
    if crisp {
        return vec![TruthValue::zero(), TruthValue::one()];
    }
    let mut pool: BTreeSet<TruthValue> = TruthValue::grid(max_denominator).into_iter().collect();
    let constants: BTreeSet<TruthValue> = fs.iter().flat_map(|f| f.constants()).collect();
    let l = TNormKind::Lukasiewicz;
    for r in &constants {
        pool.insert(r.clone());
        pool.insert(r.complement());
        for q in &constants {
            pool.insert(l.tnorm(r, q));
            pool.insert(l.residuum(r, q));
        }
    }
    pool.into_iter().collect()
}

/// Searches admissible models of the theory that make `a` small. Runs are
/// independent and merged in run order, so the result is reproducible.
pub fn truth_degree_ub(
    theory: &[Formula],
    a: &Formula,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    budget: &SearchBudget,
) -> UpperBound {
    let target = a.expand();
    let mut relevant: Vec<Formula> = theory.iter().map(Formula::expand).collect();
    relevant.push(target.clone());
    let pool = value_pool(&relevant, budget.max_denominator, config.crisp);
    let params = ModelParams {
        max_worlds: budget.max_worlds,
        max_denominator: budget.max_denominator,
        ..ModelParams::default()
    };
    let seeds = Budget { seed: budget.seed, ..Budget::default() };
    let runs: Vec<Option<(TruthValue, FittingModel)>> = (0..budget.restarts)
        .into_par_iter()
        .map(|run| {
            let climber = Climber {
                theory,
                target: &target,
                config,
                cs,
                relevant: relevant.clone(),
                direction: if run % 2 == 0 { 1 } else { -1 },
            };
            // The first runs start from single-world models.
            let params = if run < 4 { ModelParams { max_worlds: 1, ..params.clone() } } else { params.clone() };
            let start = random_model(seeds.trial_seed(run), &params, config, cs, &relevant);
            let (m, score) = climber.climb(start, &pool, budget.sweeps);
            let zero = Rational::from_integer(0.into());
            (score.deficit == zero && climber.admissible(&m)).then_some((score.value, m))
        })
        .collect();
    let best = runs.into_iter().flatten().min_by(|x, y| match x.0.cmp(&y.0) {
        Ordering::Equal => Ordering::Less,
        other => other,
    });
    match best {
        Some((value, m)) if !value.is_one() => {
            let values = m.eval_all(&target);
            let w = values.iter().position(|v| *v == value).expect("the minimum is attained");
            let world = m.world_name(w).to_string();
            UpperBound { value, witness: Some((m, world)) }
        }
        _ => UpperBound { value: TruthValue::one(), witness: None },
    }
}

pub fn degree_interval(
    theory: &[Formula],
    a: &Formula,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    depth: usize,
    budget: &SearchBudget,
) -> Result<DegreeInterval, DegreeError> {
    let lower = provability_degree_lb(theory, a, config, cs, depth)?;
    let upper = truth_degree_ub(theory, a, config, cs, budget);
    if lower.value > upper.value {
        return Err(DegreeError::Inconsistent { lower: lower.value, upper: upper.value });
    }
    Ok(DegreeInterval {
        lower: lower.value,
        upper: upper.value,
        lower_witness: lower.derivation,
        upper_witness: upper.witness,
    })
}

/// An entry of the degree corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCase {
    pub theory: Vec<&'static str>,
    pub target: &'static str,
    /// The degree, for the cases built so that it is known.
    pub exact: Option<&'static str>,
}

const fn case(theory: Vec<&'static str>, target: &'static str, exact: Option<&'static str>) -> DegreeCase {
    DegreeCase { theory, target, exact }
}

/// Thirty theory/formula pairs over RPLJ: ten with known degree and twenty
/// checked only for `lower <= upper`.
pub fn degree_corpus() -> Vec<DegreeCase> {
    vec![
        case(vec!["#1/2 -> p"], "p", Some("1/2")),
        case(vec![], "p", Some("0")),
        case(vec!["p"], "p", Some("1")),
        case(vec![], "(p & q) -> (q & p)", Some("1")),
        case(vec!["#1/3 -> p"], "p", Some("1/3")),
        case(vec!["#1/2 -> (p -> q)", "#1 -> p"], "q", Some("1/2")),
        case(vec!["#3/4 -> (p -> q)", "#1/2 -> p"], "q", Some("1/4")),
        case(vec!["#3/4 -> s:(p -> q)", "#1/2 -> t:p"], "s.t:q", Some("1/4")),
        case(vec!["#1/2 -> s:p"], "s+t:p", Some("1/2")),
        case(vec!["#3/4 -> p"], "p & p", Some("1/2")),
        case(vec!["p -> q", "p"], "q", None),
        case(vec!["#1/2 -> p", "#1/2 -> q"], "p & q", None),
        case(vec![], "p \\/ ~p", None),
        case(vec!["#2/3 -> p"], "~~p", None),
        case(vec![], "t:p", None),
        case(vec!["#1/2 -> p"], "q -> p", None),
        case(vec!["#1/2 -> p"], "#1/2 -> p", None),
        case(vec!["#1/4 -> p"], "#1/2 -> p", None),
        case(vec![], "c:(#0 -> p)", None),
        case(vec!["#2/3 -> s:p"], "t+s:p", None),
        case(vec!["#1/2 -> s:(p -> q)", "#1/2 -> t:p"], "s.t:q", None),
        case(vec!["#1/2 -> p"], "p /\\ p", None),
        case(vec!["p & q"], "p", None),
        case(vec!["#3/5 -> p"], "p & (p & p)", None),
        case(vec!["#1/3 -> p", "#2/3 -> (p -> q)"], "q & p", None),
        case(vec![], "#1/3", None),
        case(vec!["s:p"], "p", None),
        case(vec!["#1/2 -> p"], "p \\/ q", None),
        case(vec!["~p"], "p -> q", None),
        case(vec!["#1/2 -> x:(p & q)", "#1 -> y:((p & q) -> p)"], "y.x:p", None),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check_derivation;

    fn parse_all(ts: &[&str]) -> Vec<Formula> {
        ts.iter().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn lower_bounds_are_checked_graded_derivations() {
        let cs = ConstantSpecification::total();
        let config = LogicConfig::rplj();
        for case in degree_corpus() {
            let theory = parse_all(&case.theory);
            let a: Formula = case.target.parse().unwrap();
            let lb = provability_degree_lb(&theory, &a, &config, &cs, 4).unwrap();
            let report = check_derivation(&lb.derivation, &config, &cs).unwrap();
            let expected = Formula::imp(Formula::Const(lb.value.clone()), a.clone()).expand();
            assert_eq!(report.conclusion, expected, "{}", case.target);
            assert!(lb.derivation.hypotheses.iter().all(|h| theory.iter().any(|t| t.expand() == *h)));
        }
    }

    #[test]
    fn known_degrees_are_pinned() {
        let cs = ConstantSpecification::total();
        let config = LogicConfig::rplj();
        for case in degree_corpus().into_iter().filter(|c| c.exact.is_some()) {
            let theory = parse_all(&case.theory);
            let a: Formula = case.target.parse().unwrap();
            let exact: TruthValue = case.exact.unwrap().parse().unwrap();
            let interval = degree_interval(&theory, &a, &config, &cs, 4, &SearchBudget::default()).unwrap();
            assert_eq!((interval.lower.clone(), interval.upper.clone()), (exact.clone(), exact), "{}", case.target);
            if let Some((m, w)) = &interval.upper_witness {
                assert_eq!(m.eval(w, &a).unwrap(), interval.upper);
                assert!(theory.iter().all(|h| m.is_valid_in_model(h)));
            }
        }
    }

    #[test]
    fn depth_zero_and_constants() {
        let cs = ConstantSpecification::total();
        let config = LogicConfig::rpl();
        let lb = provability_degree_lb(&[], &"#1/3".parse().unwrap(), &config, &cs, 0).unwrap();
        assert_eq!(lb.value, TruthValue::ratio(1, 3));
        let ub = truth_degree_ub(&[], &"#1/3".parse().unwrap(), &config, &cs, &SearchBudget::default());
        assert_eq!(ub.value, TruthValue::ratio(1, 3));
        let taut: Formula = "(p & q) -> p".parse().unwrap();
        let ub = truth_degree_ub(&[], &taut, &config, &cs, &SearchBudget::default());
        assert_eq!((ub.value, ub.witness), (TruthValue::one(), None));
        assert!(provability_degree_lb(&[], &taut, &LogicConfig::lj(), &cs, 1).is_err());
    }
}
