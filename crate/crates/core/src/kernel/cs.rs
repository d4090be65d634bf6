//! Constant specifications.
//!
//! An entry is `c_n:...:c_1:A` in logics with IAN and
//! `c_n<1>:...:c_1<1>:A` (the expansion of `c:{==1}`) in RPLJ, where `A` is
//! an axiom instance. A finite specification must be downward closed; the
//! schematic-total specification contains every well-shaped entry.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use super::axioms::axiom_instance_of;
use crate::logic::LogicConfig;
use crate::syntax::{parse_formula, Formula, ParseError, Term};
use crate::truth::TruthValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsMode {
    Finite,
    SchematicTotal,
}

#[derive(Debug, Clone)]
pub struct ConstantSpecification {
    mode: CsMode,
    entries: Vec<Formula>,
    members: HashSet<Formula>,
    canonical: Arc<Mutex<CanonicalNames>>,
}

#[derive(Debug, Default)]
struct CanonicalNames {
    by_formula: HashMap<Formula, Term>,
    next: usize,
}

/// Wraps `body` in one necessitation layer with constant `c`.
pub fn necessitate(c: &Term, body: &Formula, graded: bool) -> Formula {
    let body = body.expand();
    if graded {
        Formula::exactly(c.clone(), TruthValue::one(), body).expand()
    } else {
        Formula::just(c.clone(), body)
    }
}

/// Splits off the outermost necessitation layer: `(c, tail)`.
pub fn peel(f: &Formula, graded: bool) -> Option<(&Term, &Formula)> {
    let (c, body) = if graded { f.as_expanded_exact_one()? } else { f.as_justified()? };
    c.is_constant().then_some((c, body))
}

/// Layers of an entry from the outside in, and the innermost body.
pub fn layers(f: &Formula, graded: bool) -> (Vec<&Term>, &Formula) {
    let mut constants = Vec::new();
    let mut cur = f;
    while let Some((c, body)) = peel(cur, graded) {
        constants.push(c);
        cur = body;
    }
    (constants, cur)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CsViolation {
    /// Not of the necessitation shape required by the logic.
    Shape { entry: Formula },
    /// The innermost body is not an axiom instance.
    Body { entry: Formula, body: Formula },
    /// The tail of an entry is missing.
    Closure { entry: Formula, missing: Formula },
}

impl fmt::Display for CsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CsViolation::Shape { entry } => write!(f, "shape: `{entry}` is not a constant necessitation"),
            CsViolation::Body { entry, body } => {
                write!(f, "body: `{body}` in `{entry}` is not an axiom instance")
            }
            CsViolation::Closure { entry, missing } => {
                write!(f, "closure: `{entry}` is present but `{missing}` is not")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsReport {
    pub entries: usize,
    pub violations: Vec<CsViolation>,
}

impl CsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum CsParseError {
    #[error("line {line}: {source}")]
    Formula { line: usize, source: ParseError },
}

impl ConstantSpecification {
    pub fn finite(entries: impl IntoIterator<Item = Formula>) -> Self {
        let mut list = Vec::new();
        let mut members = HashSet::new();
        for e in entries {
            let e = e.expand();
            if members.insert(e.clone()) {
                list.push(e);
            }
        }
        ConstantSpecification { mode: CsMode::Finite, entries: list, members, canonical: Default::default() }
    }

    pub fn empty() -> Self {
        Self::finite(Vec::new())
    }

    pub fn total() -> Self {
        ConstantSpecification {
            mode: CsMode::SchematicTotal,
            entries: Vec::new(),
            members: HashSet::new(),
            canonical: Default::default(),
        }
    }

    /// One entry per non-empty line; `//` starts a comment.
    pub fn parse_finite(text: &str, config: &LogicConfig) -> Result<Self, CsParseError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split("//").next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let f = parse_formula(line, config).map_err(|source| CsParseError::Formula { line: i + 1, source })?;
            entries.push(f);
        }
        Ok(Self::finite(entries))
    }

    pub fn mode(&self) -> CsMode {
        self.mode
    }

    pub fn is_total(&self) -> bool {
        self.mode == CsMode::SchematicTotal
    }

    /// Entries of a finite specification, expanded.
    pub fn entries(&self) -> &[Formula] {
        &self.entries
    }

    /// Membership of a whole entry.
    pub fn contains(&self, f: &Formula, config: &LogicConfig) -> bool {
        let f = f.expand();
        match self.mode {
            CsMode::Finite => self.members.contains(&f),
            CsMode::SchematicTotal => {
                let (constants, body) = layers(&f, config.uses_graded_necessitation());
                !constants.is_empty() && axiom_instance_of(body, config).is_some()
            }
        }
    }

    /// Whether the specification contains the entry `c:body`, so that the
    /// evidence `E(c, body)` is forced to 1.
    pub fn justifies(&self, c: &Term, body: &Formula, config: &LogicConfig) -> bool {
        if !c.is_constant() {
            return false;
        }
        self.contains(&necessitate(c, body, config.uses_graded_necessitation()), config)
    }

    /// `(c, body)` pairs of a finite specification.
    pub fn pairs(&self, config: &LogicConfig) -> Vec<(Term, Formula)> {
        let graded = config.uses_graded_necessitation();
        self.entries.iter().filter_map(|e| peel(e, graded).map(|(c, body)| (c.clone(), body.clone()))).collect()
    }

    /// A constant for `f`, stable for the lifetime of this specification and
    /// shared between clones.
    pub fn canonical_constant(&self, f: &Formula) -> Term {
        let f = f.expand();
        let mut names = self.canonical.lock().expect("constant table lock");
        if let Some(c) = names.by_formula.get(&f) {
            return c.clone();
        }
        names.next += 1;
        let c = Term::constant(&format!("c{}", names.next));
        names.by_formula.insert(f, c.clone());
        c
    }
}

/// Checks shapes, axiom bodies and downward closure of the entries.
pub fn check_cs(cs: &ConstantSpecification, config: &LogicConfig) -> CsReport {
    let graded = config.uses_graded_necessitation();
    let mut violations = Vec::new();
    for entry in cs.entries() {
        let Some((_, tail)) = peel(entry, graded) else {
            violations.push(CsViolation::Shape { entry: entry.clone() });
            continue;
        };
        let (_, body) = layers(entry, graded);
        if axiom_instance_of(body, config).is_none() {
            violations.push(CsViolation::Body { entry: entry.clone(), body: body.clone() });
        }
        if peel(tail, graded).is_some() && !cs.contains(tail, config) {
            violations.push(CsViolation::Closure { entry: entry.clone(), missing: tail.clone() });
        }
    }
    CsReport { entries: cs.entries().len(), violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> Formula {
        text.parse().unwrap()
    }

    #[test]
    fn closure_violation() {
        let config = LogicConfig::blj();
        let cs = ConstantSpecification::finite([f("c2:c1:((p & q) -> p)")]);
        let report = check_cs(&cs, &config);
        assert!(matches!(report.violations.as_slice(), [CsViolation::Closure { .. }]));
        let cs = ConstantSpecification::finite([f("c2:c1:((p & q) -> p)"), f("c1:((p & q) -> p)")]);
        assert!(check_cs(&cs, &config).passed());
    }

    #[test]
    fn body_violation() {
        let cs = ConstantSpecification::finite([f("c:p")]);
        let report = check_cs(&cs, &LogicConfig::blj());
        assert!(matches!(report.violations.as_slice(), [CsViolation::Body { .. }]));
    }

    #[test]
    fn total_membership() {
        let config = LogicConfig::rplj();
        let cs = ConstantSpecification::total();
        assert!(check_cs(&cs, &config).passed());
        assert!(cs.contains(&f("c:{==1}((p & q) -> p)"), &config));
        assert!(cs.contains(&f("c3:{==1}c:{==1}((p & q) -> p)"), &config));
        assert!(!cs.contains(&f("c:{==1}(p -> q)"), &config));
        assert!(!cs.contains(&f("c:((p & q) -> p)"), &config));
        assert!(cs.justifies(&Term::constant("c7"), &f("#0 -> p"), &config));
        assert!(!cs.justifies(&Term::var("x"), &f("#0 -> p"), &config));
    }

    #[test]
    fn canonical_constants_are_stable_and_shared() {
        let cs = ConstantSpecification::total();
        let clone = cs.clone();
        let a = cs.canonical_constant(&f("#0 -> p"));
        let b = cs.canonical_constant(&f("#0 -> q"));
        assert_ne!(a, b);
        assert_eq!(clone.canonical_constant(&f("#0 -> p")), a);
    }
}
