//! Derivations, the checker and the line-oriented proof format.
//!
//! ```text
//! HYP p & q
//! STEP 1 p & q -> p BY AX BL2
//! STEP 2 p & q BY HYP 1
//! STEP 3 p BY MP 2 1
//! ```
//!
//! Step and hypothesis indices are 1-based. `MP i j` takes the minor premise
//! `A` from step `i` and the major premise `A -> B` from step `j`.

use std::fmt;

use thiserror::Error;

use super::axioms::{is_active, resolve_alias, scheme};
use super::cs::{layers, ConstantSpecification};
use crate::logic::LogicConfig;
use crate::syntax::{parse_formula, Formula, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    /// 0-based index into the hypotheses.
    Hypothesis(usize),
    Axiom(String),
    /// 0-based step indices of `A` and `A -> B`.
    ModusPonens {
        minor: usize,
        major: usize,
    },
    Ian,
    Gian,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub formula: Formula,
    pub rule: Rule,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Derivation {
    pub hypotheses: Vec<Formula>,
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("the derivation has no steps")]
    Empty,
    #[error("reference to step {0}, which does not precede this step")]
    DanglingReference(usize),
    #[error("hypothesis {index} is out of range ({count} hypotheses)")]
    HypothesisOutOfRange { index: usize, count: usize },
    #[error("formula differs from hypothesis {0}")]
    HypothesisMismatch(usize),
    #[error("unknown axiom scheme `{0}`")]
    UnknownScheme(String),
    #[error("axiom scheme `{scheme}` is not part of {logic}")]
    SchemeNotActive { scheme: String, logic: String },
    #[error("formula is not an instance of `{0}`")]
    AxiomMismatch(String),
    #[error("major premise `{major}` is not an implication from the minor premise to this formula")]
    WrongModusPonensShape { major: Formula },
    #[error("{rule} is not a rule of {logic}")]
    RuleUnavailable { rule: &'static str, logic: String },
    #[error("formula is not a member of the constant specification")]
    NotInConstantSpecification,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {}: {error}", .step + 1)]
pub struct CheckFailure {
    /// 0-based index of the first rejected step.
    pub step: usize,
    pub error: StepError,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub steps: usize,
    pub conclusion: Formula,
}

/// Accepts iff every step is justified by its rule; reports the first
/// rejected step otherwise. Formulas are compared after expansion.
pub fn check_derivation(
    d: &Derivation,
    config: &LogicConfig,
    cs: &ConstantSpecification,
) -> Result<CheckReport, CheckFailure> {
    if d.steps.is_empty() {
        return Err(CheckFailure { step: 0, error: StepError::Empty });
    }
    let hypotheses: Vec<Formula> = d.hypotheses.iter().map(Formula::expand).collect();
    let mut proved: Vec<Formula> = Vec::with_capacity(d.steps.len());
    for (i, step) in d.steps.iter().enumerate() {
        let formula = step.formula.expand();
        check_step(&formula, &step.rule, i, &proved, &hypotheses, config, cs)
            .map_err(|error| CheckFailure { step: i, error })?;
        proved.push(formula);
    }
    Ok(CheckReport { steps: proved.len(), conclusion: proved.pop().expect("non-empty") })
}

fn check_step(
    formula: &Formula,
    rule: &Rule,
    i: usize,
    proved: &[Formula],
    hypotheses: &[Formula],
    config: &LogicConfig,
    cs: &ConstantSpecification,
) -> Result<(), StepError> {
    match rule {
        Rule::Hypothesis(h) => {
            let hyp =
                hypotheses.get(*h).ok_or(StepError::HypothesisOutOfRange { index: h + 1, count: hypotheses.len() })?;
            if hyp != formula {
                return Err(StepError::HypothesisMismatch(h + 1));
            }
        }
        Rule::Axiom(tag) => {
            let names = resolve_alias(tag);
            if names.is_empty() {
                return Err(StepError::UnknownScheme(tag.clone()));
            }
            let active: Vec<_> = names.iter().filter(|n| is_active(n, config)).collect();
            if active.is_empty() {
                return Err(StepError::SchemeNotActive { scheme: tag.clone(), logic: config.name() });
            }
            let matched = active.iter().any(|n| scheme(n).is_some_and(|s| s.matches(formula).is_some()));
            if !matched {
                return Err(StepError::AxiomMismatch(tag.clone()));
            }
        }
        Rule::ModusPonens { minor, major } => {
            for &r in [minor, major] {
                if r >= i {
                    return Err(StepError::DanglingReference(r + 1));
                }
            }
            let major_formula = &proved[*major];
            let ok = matches!(major_formula.as_implication(), Some((a, b)) if *a == proved[*minor] && b == formula);
            if !ok {
                return Err(StepError::WrongModusPonensShape { major: major_formula.clone() });
            }
        }
        Rule::Ian | Rule::Gian => {
            let graded = matches!(rule, Rule::Gian);
            let (name, available) = if graded {
                ("GIAN", config.uses_graded_necessitation())
            } else {
                ("IAN", config.justified && !config.uses_graded_necessitation())
            };
            if !available {
                return Err(StepError::RuleUnavailable { rule: name, logic: config.name() });
            }
            let (constants, _) = layers(formula, graded);
            if constants.is_empty() || !cs.contains(formula, config) {
                return Err(StepError::NotInConstantSpecification);
            }
        }
    }
    Ok(())
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in &self.hypotheses {
            writeln!(f, "HYP {h}")?;
        }
        for (i, step) in self.steps.iter().enumerate() {
            write!(f, "STEP {} {} BY ", i + 1, step.formula)?;
            match &step.rule {
                Rule::Hypothesis(h) => writeln!(f, "HYP {}", h + 1)?,
                Rule::Axiom(name) => writeln!(f, "AX {name}")?,
                Rule::ModusPonens { minor, major } => writeln!(f, "MP {} {}", minor + 1, major + 1)?,
                Rule::Ian => writeln!(f, "IAN")?,
                Rule::Gian => writeln!(f, "GIAN")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum DerivationParseError {
    #[error("line {line}: {source}")]
    Formula { line: usize, source: ParseError },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Reads the line-oriented proof format; `//` starts a comment.
pub fn parse_derivation(text: &str, config: &LogicConfig) -> Result<Derivation, DerivationParseError> {
    let mut d = Derivation::default();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split("//").next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let malformed = |message: String| DerivationParseError::Malformed { line: line_no, message };
        let formula = |text: &str| {
            parse_formula(text.trim(), config).map_err(|source| DerivationParseError::Formula { line: line_no, source })
        };
        if let Some(rest) = line.strip_prefix("HYP ") {
            if !d.steps.is_empty() {
                return Err(malformed("hypotheses must precede the steps".into()));
            }
            d.hypotheses.push(formula(rest)?);
            continue;
        }
        let Some(rest) = line.strip_prefix("STEP ") else {
            return Err(malformed(format!("expected `HYP` or `STEP`, found `{line}`")));
        };
        let (number, rest) =
            rest.trim_start().split_once(char::is_whitespace).ok_or_else(|| malformed("missing formula".into()))?;
        let number: usize = number.parse().map_err(|_| malformed(format!("bad step number `{number}`")))?;
        if number != d.steps.len() + 1 {
            return Err(malformed(format!("expected step {}, found {number}", d.steps.len() + 1)));
        }
        let (body, justification) = rest.rsplit_once(" BY ").ok_or_else(|| malformed("missing `BY`".into()))?;
        let words: Vec<&str> = justification.split_whitespace().collect();
        let index = |w: &str| -> Result<usize, DerivationParseError> {
            match w.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(malformed(format!("bad index `{w}`"))),
            }
        };
        let rule = match words.as_slice() {
            ["AX", name] => Rule::Axiom((*name).to_string()),
            ["HYP", i] => Rule::Hypothesis(index(i)?),
            ["MP", i, j] => Rule::ModusPonens { minor: index(i)?, major: index(j)? },
            ["IAN"] => Rule::Ian,
            ["GIAN"] => Rule::Gian,
            _ => return Err(malformed(format!("unknown justification `{justification}`"))),
        };
        d.steps.push(Step { formula: formula(body)?, rule });
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rplj_check(text: &str, cs: &ConstantSpecification) -> Result<CheckReport, CheckFailure> {
        let config = LogicConfig::rplj();
        check_derivation(&parse_derivation(text, &config).unwrap(), &config, cs)
    }

    #[test]
    fn modus_ponens_from_a_hypothesis() {
        let text = "HYP p & q\nSTEP 1 p & q -> p BY AX BL2\nSTEP 2 p & q BY HYP 1\nSTEP 3 p BY MP 2 1\n";
        let report = rplj_check(text, &ConstantSpecification::empty()).unwrap();
        assert_eq!(report.conclusion, "p".parse().unwrap());
        let d = parse_derivation(text, &LogicConfig::rplj()).unwrap();
        assert_eq!(d.to_string(), text);
    }

    #[test]
    fn graded_necessitation_from_a_finite_specification() {
        let cs = ConstantSpecification::finite(["c:{==1}((p & q) -> p)".parse().unwrap()]);
        assert!(rplj_check("STEP 1 c:{==1}((p & q) -> p) BY GIAN", &cs).is_ok());
        let err = rplj_check("STEP 1 c:{==1}((p & q) -> q) BY GIAN", &cs).unwrap_err();
        assert_eq!(err.error, StepError::NotInConstantSpecification);
    }

    #[test]
    fn rejects_bad_steps() {
        let cs = ConstantSpecification::empty();
        let bad_mp = "STEP 1 (p & q) -> p BY AX BL2\nSTEP 2 #0 -> q BY AX BL7\nSTEP 3 p BY MP 2 1";
        let err = rplj_check(bad_mp, &cs).unwrap_err();
        assert_eq!(err.step, 2);
        assert!(matches!(err.error, StepError::WrongModusPonensShape { .. }));
        let dangling = rplj_check("STEP 1 p BY MP 1 2", &cs).unwrap_err();
        assert_eq!(dangling.error, StepError::DanglingReference(1));
        let hyp = rplj_check("STEP 1 p BY HYP 1", &cs).unwrap_err();
        assert!(matches!(hyp.error, StepError::HypothesisOutOfRange { index: 1, count: 0 }));
        let mismatch = rplj_check("STEP 1 p -> p BY AX BL2", &cs).unwrap_err();
        assert_eq!(mismatch.error, StepError::AxiomMismatch("BL2".into()));
        let inactive = rplj_check("STEP 1 p & p BY AX G", &cs).unwrap_err();
        assert!(matches!(inactive.error, StepError::SchemeNotActive { .. }));
        assert_eq!(rplj_check("", &cs).unwrap_err().error, StepError::Empty);
    }

    #[test]
    fn necessitation_rule_depends_on_the_logic() {
        let config = LogicConfig::blj();
        let cs = ConstantSpecification::total();
        let d = parse_derivation("STEP 1 c:((p & q) -> p) BY IAN", &config).unwrap();
        assert!(check_derivation(&d, &config, &cs).is_ok());
        let d = parse_derivation("STEP 1 c:((p & q) -> p) BY GIAN", &config).unwrap();
        let err = check_derivation(&d, &config, &cs).unwrap_err();
        assert!(matches!(err.error, StepError::RuleUnavailable { rule: "GIAN", .. }));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_derivation("STEP 1 p BY MP 1", &LogicConfig::bl()).unwrap_err();
        assert!(matches!(err, DerivationParseError::Malformed { line: 1, .. }));
        let err = parse_derivation("// c\nSTEP 1 (p BY AX BL2", &LogicConfig::bl()).unwrap_err();
        assert!(matches!(err, DerivationParseError::Formula { line: 2, .. }));
    }
}
