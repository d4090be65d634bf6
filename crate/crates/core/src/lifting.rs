//! Lifting: turning a derivation of `B` from `A_1, ..., A_n` into a
//! derivation of `t:B` from `x_1:A_1, ..., x_n:A_n`.
//!
//! Each input step gets a term. Axioms and necessitated formulas become
//! constants justified by the constant specification, hypotheses become
//! fresh variables and modus ponens becomes application. In RPLJ every
//! justified formula is carried as `t<1>:A` (the expansion of `t:{==1}A`)
//! and application goes through justified graded modus ponens; in the other
//! justification logics the plain forms `t:A` and the application axiom are
//! used. [`internalize`] is the special case without hypotheses.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::kernel::{
    axiom_instance, check_derivation, necessitate, BuildError, CheckFailure, ConstantSpecification, Derivation, Line,
    ProofBuilder, Rule, Step,
};
use crate::logic::LogicConfig;
use crate::syntax::scheme::Substitution;
use crate::syntax::{Formula, Term};
use crate::truth::TruthValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("{0} has no justification terms")]
    NotJustified(String),
    #[error("the input derivation is rejected: {0}")]
    Invalid(CheckFailure),
    #[error("internalization needs a derivation without hypotheses")]
    HasHypotheses,
    #[error("lifting needs the schematic total constant specification, which has constants for every axiom instance")]
    NotTotal,
    #[error(transparent)]
    Build(#[from] BuildError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifted {
    /// Checked derivation of `statement` from the justified hypotheses.
    pub derivation: Derivation,
    /// The term justifying the original conclusion.
    pub term: Term,
    /// The variable assigned to each original hypothesis.
    pub hypothesis_terms: Vec<Term>,
    /// `term<1>:B` in RPLJ, `term:B` otherwise (expanded).
    pub statement: Formula,
}

struct Lifter<'a> {
    cs: &'a ConstantSpecification,
    builder: ProofBuilder,
    graded: bool,
}

fn justified(t: &Term, a: &Formula, graded: bool) -> Formula {
    if graded {
        Formula::exactly(t.clone(), TruthValue::one(), a.clone()).expand()
    } else {
        Formula::just(t.clone(), a.clone())
    }
}

impl Lifter<'_> {
    fn necessitate(&mut self, body: &Formula) -> (Term, Line) {
        let c = self.cs.canonical_constant(body);
        let line = self.builder.necessitate(&c, body);
        (c, line)
    }

    fn apply(&mut self, major: (&Term, Line), minor: (&Term, Line)) -> Result<(Term, Line), LiftError> {
        let term = Term::app(major.0.clone(), minor.0.clone());
        let line = if self.graded {
            // Graded modus ponens at grade 1: drop to `u:(A -> B)` and `v:A`,
            // apply, and restore the exact grade.
            let one = self.builder.one()?;
            let u = self.builder.exact_to_at_least(major.1)?;
            let u = self.builder.mp(one, u)?;
            let v = self.builder.exact_to_at_least(minor.1)?;
            let v = self.builder.mp(one, v)?;
            let applied = self.plain_apply((major.0, u), (minor.0, v))?;
            let at_least = self.builder.graded_one(applied)?;
            self.builder.at_least_one_to_exact(at_least)?
        } else {
            self.plain_apply((major.0, major.1), (minor.0, minor.1))?
        };
        Ok((term, line))
    }

    /// From `u:(A -> B)` and `v:A`, `u.v:B` by the application axiom.
    fn plain_apply(&mut self, major: (&Term, Line), minor: (&Term, Line)) -> Result<Line, LiftError> {
        let ab = self.builder.formula(major.1).clone();
        let shape = || BuildError::Shape { expected: "a justified implication", found: ab.clone() };
        let (_, body) = ab.as_justified().ok_or_else(shape)?;
        let (a, b) = body.as_implication().ok_or_else(shape)?;
        let appl = self.builder.appl(major.0, minor.0, a, b);
        let half = self.builder.mp(major.1, appl)?;
        Ok(self.builder.mp(minor.1, half)?)
    }
}

fn fresh_variables(d: &Derivation, n: usize) -> Vec<Term> {
    let mut used = BTreeSet::new();
    for f in d.hypotheses.iter().chain(d.steps.iter().map(|s| &s.formula)) {
        for (t, _) in f.justified_pairs() {
            used.extend(t.variables());
        }
    }
    let mut out = Vec::with_capacity(n);
    let mut k = 1;
    while out.len() < n {
        let name = format!("x{k}");
        if !used.contains(name.as_str()) {
            out.push(Term::var(&name));
        }
        k += 1;
    }
    out
}

/// Lifts a derivation checked under `config` and `cs`.
pub fn lift(d: &Derivation, config: &LogicConfig, cs: &ConstantSpecification) -> Result<Lifted, LiftError> {
    if !config.justified {
        return Err(LiftError::NotJustified(config.name()));
    }
    if !cs.is_total() {
        return Err(LiftError::NotTotal);
    }
    check_derivation(d, config, cs).map_err(LiftError::Invalid)?;
    let graded = config.uses_graded_necessitation();
    let hypothesis_terms = fresh_variables(d, d.hypotheses.len());
    let lifted_hyps: Vec<Formula> =
        d.hypotheses.iter().zip(&hypothesis_terms).map(|(h, x)| justified(x, &h.expand(), graded)).collect();
    let builder = ProofBuilder::with_hypotheses(*config, lifted_hyps.clone());
    let mut lifter = Lifter { cs, builder, graded };

    let mut lines: Vec<(Term, Line)> = Vec::with_capacity(d.steps.len());
    for step in &d.steps {
        let formula = step.formula.expand();
        let entry = match &step.rule {
            Rule::Hypothesis(i) => (hypothesis_terms[*i].clone(), lifter.builder.hyp(&lifted_hyps[*i])),
            Rule::Axiom(_) | Rule::Ian | Rule::Gian => lifter.necessitate(&formula),
            Rule::ModusPonens { minor, major } => {
                let (mt, ml) = lines[*major].clone();
                let (nt, nl) = lines[*minor].clone();
                lifter.apply((&mt, ml), (&nt, nl))?
            }
        };
        lines.push(entry);
    }
    let (term, last) = lines.pop().expect("checked derivations are non-empty");
    let derivation = lifter.builder.into_derivation(last);
    let statement = derivation.conclusion().expect("non-empty").clone();
    Ok(Lifted { derivation, term, hypothesis_terms, statement })
}

/// Lifting of a hypothesis-free derivation: from a proof of `B`, a proof of
/// `t:B` (or `t<1>:B` in RPLJ).
pub fn internalize(d: &Derivation, config: &LogicConfig, cs: &ConstantSpecification) -> Result<Lifted, LiftError> {
    if !d.hypotheses.is_empty() {
        return Err(LiftError::HasHypotheses);
    }
    lift(d, config, cs)
}

/// Whether every line except the last is used exactly once as a premise.
pub fn is_tree_shaped(d: &Derivation) -> bool {
    let mut uses = vec![0usize; d.steps.len()];
    for step in &d.steps {
        if let Rule::ModusPonens { minor, major } = step.rule {
            uses[minor] += 1;
            uses[major] += 1;
        }
    }
    let last = d.steps.len().saturating_sub(1);
    uses.iter().enumerate().all(|(i, &u)| if i == last { u == 0 } else { u == 1 })
}

/// A random tree-shaped derivation of modus ponens depth at most
/// `max_depth` over propositions `p`, `q`, `r`. Leaves are axiom instances
/// or hypotheses, and in justification logics also necessitated axioms.
pub fn random_tree_derivation(seed: u64, config: &LogicConfig, max_depth: usize) -> Derivation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = Derivation::default();
    let depth = rng.random_range(0..=max_depth);
    grow(&mut rng, config, depth, &mut d);
    d
}

fn random_formula(rng: &mut impl Rng, size: usize) -> Formula {
    if size == 0 || rng.random_bool(0.3) {
        return match rng.random_range(0..4) {
            0 => Formula::prop("p"),
            1 => Formula::prop("q"),
            2 => Formula::prop("r"),
            _ => Formula::bottom(),
        };
    }
    let (a, b) = (random_formula(rng, size - 1), random_formula(rng, size - 1));
    if rng.random_bool(0.5) {
        Formula::imp(a, b)
    } else {
        Formula::conj(a, b)
    }
}

fn push(d: &mut Derivation, formula: Formula, rule: Rule) -> usize {
    d.steps.push(Step { formula, rule });
    d.steps.len() - 1
}

fn leaf(rng: &mut impl Rng, config: &LogicConfig, d: &mut Derivation) -> usize {
    let a = random_formula(rng, 1);
    let b = random_formula(rng, 1);
    match rng.random_range(0..4) {
        0 => {
            let h = random_formula(rng, 2);
            d.hypotheses.push(h.clone());
            let i = d.hypotheses.len() - 1;
            push(d, h, Rule::Hypothesis(i))
        }
        1 if config.justified => {
            let body = axiom_instance("BL2", &Substitution::new().formula("A", a).formula("B", b));
            let c = Term::constant("c");
            let f = necessitate(&c, &body, config.uses_graded_necessitation());
            let rule = if config.uses_graded_necessitation() { Rule::Gian } else { Rule::Ian };
            push(d, f, rule)
        }
        _ => {
            let f = axiom_instance("BL3", &Substitution::new().formula("A", a).formula("B", b));
            push(d, f, Rule::Axiom("BL3".into()))
        }
    }
}

/// Appends a subtree and returns the line of its root.
fn grow(rng: &mut impl Rng, config: &LogicConfig, depth: usize, d: &mut Derivation) -> usize {
    if depth == 0 {
        return leaf(rng, config, d);
    }
    let minor = grow(rng, config, depth - 1, d);
    let a = d.steps[minor].formula.clone();
    let c = random_formula(rng, 1);
    let (major_formula, rule) = match a.as_implication() {
        Some((x, y)) if rng.random_bool(0.5) => {
            let sigma = Substitution::new().formula("A", x.clone()).formula("B", y.clone()).formula("C", c);
            (axiom_instance("BL1", &sigma), Rule::Axiom("BL1".into()))
        }
        _ => {
            let h = Formula::imp(a.clone(), c);
            d.hypotheses.push(h.clone());
            (h, Rule::Hypothesis(d.hypotheses.len() - 1))
        }
    };
    let major = push(d, major_formula, rule);
    let consequent = d.steps[major].formula.as_implication().expect("major premises are implications").1.clone();
    push(d, consequent, Rule::ModusPonens { minor, major })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::golden::{graded_derivation, propositional_derivation};

    #[test]
    fn internalizes_golden_theorems() {
        let fs = ["p", "q", "r", "s"].map(Formula::prop);
        let cs = ConstantSpecification::total();
        for config in [LogicConfig::gj(), LogicConfig::rplj(), LogicConfig::j()] {
            for item in 0..8 {
                let d = propositional_derivation(item, config, &fs);
                let lifted = internalize(&d, &config, &cs).unwrap();
                check_derivation(&lifted.derivation, &config, &cs).unwrap();
                let body = d.conclusion().unwrap().expand();
                let expected = if config.uses_graded_necessitation() {
                    Formula::exactly(lifted.term.clone(), TruthValue::one(), body).expand()
                } else {
                    Formula::just(lifted.term.clone(), body)
                };
                assert_eq!(lifted.statement, expected);
            }
        }
        let d = graded_derivation(5, &Term::var("y"), &Formula::prop("p"), &TruthValue::zero(), &TruthValue::one())
            .unwrap();
        assert!(internalize(&d, &LogicConfig::rplj(), &cs).is_ok());
    }

    #[test]
    fn lifts_hypotheses_and_bounds_term_size() {
        let cs = ConstantSpecification::total();
        for config in [LogicConfig::lj(), LogicConfig::rplj()] {
            for seed in 0..30 {
                let d = random_tree_derivation(seed, &config, 4);
                assert!(is_tree_shaped(&d));
                let lifted = lift(&d, &config, &cs).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
                let report = check_derivation(&lifted.derivation, &config, &cs).unwrap();
                assert_eq!(report.conclusion, lifted.statement);
                assert!(lifted.term.size() <= d.len(), "seed {seed}");
                assert_eq!(lifted.derivation.hypotheses.len(), d.hypotheses.len());
            }
        }
    }

    #[test]
    fn rejects_unsuitable_inputs() {
        let d = propositional_derivation(3, LogicConfig::rplj(), &["p", "q", "r", "s"].map(Formula::prop));
        let entry = Formula::exactly(Term::constant("c7"), TruthValue::one(), d.conclusion().unwrap().clone());
        let finite = ConstantSpecification::finite([entry]);
        assert_eq!(lift(&d, &LogicConfig::rplj(), &finite), Err(LiftError::NotTotal));
        let total = ConstantSpecification::total();
        assert!(matches!(lift(&d, &LogicConfig::rpl(), &total), Err(LiftError::NotJustified(_))));
        let mut bad = d.clone();
        bad.steps[0].rule = Rule::Axiom("BL1".into());
        assert!(matches!(lift(&bad, &LogicConfig::rplj(), &total), Err(LiftError::Invalid(_))));
        let with_hyp = Derivation {
            hypotheses: vec![Formula::prop("p")],
            steps: vec![Step { formula: Formula::prop("p"), rule: Rule::Hypothesis(0) }],
        };
        assert_eq!(internalize(&with_hyp, &LogicConfig::rplj(), &total), Err(LiftError::HasHypotheses));
        let lifted = lift(&with_hyp, &LogicConfig::rplj(), &total).unwrap();
        assert_eq!(lifted.term, Term::var("x1"));
        assert_eq!(lifted.derivation.len(), 1);
    }

    #[test]
    fn nested_internalization_adds_a_layer() {
        let total = ConstantSpecification::total();
        let config = LogicConfig::rplj();
        let d = propositional_derivation(3, config, &["p", "q", "r", "s"].map(Formula::prop));
        let once = internalize(&d, &config, &total).unwrap();
        let twice = internalize(&once.derivation, &config, &total).unwrap();
        let expected = Formula::exactly(twice.term.clone(), TruthValue::one(), once.statement.clone()).expand();
        assert_eq!(twice.statement, expected);
        assert!(twice.term.is_constant() && twice.term != once.term);
    }
}
