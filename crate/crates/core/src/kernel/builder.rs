//! Incremental construction of derivations.
//!
//! Steps are stored expanded and deduplicated, so deriving the same formula
//! twice reuses the earlier line. [`ProofBuilder::into_derivation`] prunes
//! everything the chosen conclusion does not depend on.

use std::collections::HashMap;

use thiserror::Error;

use super::axioms::instance;
use super::cs::necessitate;
use super::derivation::{Derivation, Rule, Step};
use crate::logic::LogicConfig;
use crate::syntax::scheme::Substitution;
use crate::syntax::{Formula, Term};

/// Index of a derived formula inside a [`ProofBuilder`].
pub type Line = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("expected {expected}, found `{found}`")]
    Shape { expected: &'static str, found: Formula },
    #[error("{0} is not available in this logic")]
    Unavailable(&'static str),
}

#[derive(Debug, Clone)]
pub struct ProofBuilder {
    config: LogicConfig,
    hypotheses: Vec<Formula>,
    steps: Vec<Step>,
    index: HashMap<Formula, Line>,
}

impl ProofBuilder {
    pub fn new(config: LogicConfig) -> Self {
        ProofBuilder { config, hypotheses: Vec::new(), steps: Vec::new(), index: HashMap::new() }
    }

    /// Declares hypotheses without using them yet; their order is kept.
    pub fn with_hypotheses(config: LogicConfig, hypotheses: impl IntoIterator<Item = Formula>) -> Self {
        let mut b = Self::new(config);
        b.hypotheses = hypotheses.into_iter().map(|h| h.expand()).collect();
        b
    }

    pub fn config(&self) -> &LogicConfig {
        &self.config
    }

    pub fn formula(&self, line: Line) -> &Formula {
        &self.steps[line].formula
    }

    pub fn find(&self, f: &Formula) -> Option<Line> {
        self.index.get(&f.expand()).copied()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn push(&mut self, formula: Formula, rule: Rule) -> Line {
        if let Some(&line) = self.index.get(&formula) {
            return line;
        }
        let line = self.steps.len();
        self.index.insert(formula.clone(), line);
        self.steps.push(Step { formula, rule });
        line
    }

    /// Uses a hypothesis, declaring it if necessary.
    pub fn hyp(&mut self, f: &Formula) -> Line {
        let f = f.expand();
        let idx = match self.hypotheses.iter().position(|h| *h == f) {
            Some(i) => i,
            None => {
                self.hypotheses.push(f.clone());
                self.hypotheses.len() - 1
            }
        };
        self.push(f, Rule::Hypothesis(idx))
    }

    pub fn axiom(&mut self, name: &str, sigma: &Substitution) -> Line {
        self.push(instance(name, sigma), Rule::Axiom(name.to_string()))
    }

    /// Necessitation with constant `c` over `body`, by IAN or GIAN depending
    /// on the logic. Membership in the constant specification is left to the
    /// checker.
    pub fn necessitate(&mut self, c: &Term, body: &Formula) -> Line {
        let graded = self.config.uses_graded_necessitation();
        let rule = if graded { Rule::Gian } else { Rule::Ian };
        self.push(necessitate(c, body, graded), rule)
    }

    pub fn mp(&mut self, minor: Line, major: Line) -> Result<Line, BuildError> {
        let conclusion = match self.formula(major).as_implication() {
            Some((a, b)) if a == self.formula(minor) => b.clone(),
            _ => {
                return Err(BuildError::Shape {
                    expected: "an implication from the minor premise",
                    found: self.formula(major).clone(),
                })
            }
        };
        Ok(self.push(conclusion, Rule::ModusPonens { minor, major }))
    }

    /// Modus ponens whose shape is guaranteed by construction.
    pub(crate) fn mp_ok(&mut self, minor: Line, major: Line) -> Line {
        self.mp(minor, major).expect("derived rules build well-shaped modus ponens")
    }

    pub fn implication(&self, line: Line) -> Result<(Formula, Formula), BuildError> {
        match self.formula(line).as_implication() {
            Some((a, b)) => Ok((a.clone(), b.clone())),
            None => Err(BuildError::Shape { expected: "an implication", found: self.formula(line).clone() }),
        }
    }

    pub fn conjunction(&self, line: Line) -> Result<(Formula, Formula), BuildError> {
        match self.formula(line).as_conjunction() {
            Some((a, b)) => Ok((a.clone(), b.clone())),
            None => Err(BuildError::Shape { expected: "a strong conjunction", found: self.formula(line).clone() }),
        }
    }

    /// All steps built so far.
    pub fn derivation(&self) -> Derivation {
        Derivation { hypotheses: self.hypotheses.clone(), steps: self.steps.clone() }
    }

    /// The steps `target` depends on, renumbered, ending with `target`.
    pub fn into_derivation(&self, target: Line) -> Derivation {
        let mut needed = vec![false; self.steps.len()];
        let mut stack = vec![target];
        while let Some(l) = stack.pop() {
            if std::mem::replace(&mut needed[l], true) {
                continue;
            }
            if let Rule::ModusPonens { minor, major } = self.steps[l].rule {
                stack.push(minor);
                stack.push(major);
            }
        }
        let mut renumber = vec![usize::MAX; self.steps.len()];
        let mut steps = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            if !needed[i] || i == target {
                continue;
            }
            renumber[i] = steps.len();
            steps.push(step.clone());
        }
        renumber[target] = steps.len();
        steps.push(self.steps[target].clone());
        for step in &mut steps {
            if let Rule::ModusPonens { minor, major } = &mut step.rule {
                *minor = renumber[*minor];
                *major = renumber[*major];
            }
        }
        Derivation { hypotheses: self.hypotheses.clone(), steps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::cs::ConstantSpecification;
    use crate::kernel::derivation::check_derivation;

    #[test]
    fn deduplicates_and_prunes() {
        let mut b = ProofBuilder::new(LogicConfig::bl());
        let p: Formula = "p & q".parse().unwrap();
        let h = b.hyp(&p);
        assert_eq!(b.hyp(&p), h);
        let unused = b.axiom("BL7", &Substitution::new().formula("A", "p".parse().unwrap()));
        let ax =
            b.axiom("BL2", &Substitution::new().formula("A", "p".parse().unwrap()).formula("B", "q".parse().unwrap()));
        let goal = b.mp(h, ax).unwrap();
        assert!(b.mp(unused, ax).is_err());
        let d = b.into_derivation(goal);
        assert_eq!(d.steps.len(), 3);
        let report = check_derivation(&d, &LogicConfig::bl(), &ConstantSpecification::empty()).unwrap();
        assert_eq!(report.conclusion, "p".parse().unwrap());
    }
}
