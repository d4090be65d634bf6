//! Admissibility of a model for a logic and a constant specification.
//!
//! Evidence conditions quantify over all terms and formulas, but a finite
//! model only tables finitely many entries. The checks run over the
//! *relevant closure*: the justified pairs of the formulas of interest and
//! the tabled evidence keys, together with every condition whose premises lie
//! in that set. Conclusions outside the set are checked too, since their
//! value falls back to the default evidence.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{EvidenceKey, FittingModel};
use crate::algebra::TNormKind;
use crate::kernel::ConstantSpecification;
use crate::logic::LogicConfig;
use crate::syntax::{Formula, Term};
use crate::truth::TruthValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameProperty {
    Reflexive,
    Serial,
}

impl FrameProperty {
    pub fn holds(self, m: &FittingModel) -> bool {
        match self {
            FrameProperty::Reflexive => m.is_reflexive(),
            FrameProperty::Serial => m.is_serial(),
        }
    }

    /// Frame conditions required by the logic.
    pub fn required_by(config: &LogicConfig) -> Vec<FrameProperty> {
        let mut out = Vec::new();
        if config.justified && config.jt {
            out.push(FrameProperty::Reflexive);
        }
        if config.justified && config.jd {
            out.push(FrameProperty::Serial);
        }
        out
    }
}

impl fmt::Display for FrameProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameProperty::Reflexive => "reflexive",
            FrameProperty::Serial => "serial",
        })
    }
}

/// An inequality between evidence values that must hold at every world.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Constraint {
    /// `E(s, A -> B) * E(t, A) <= E(s.t, B)`
    Application { major: EvidenceKey, minor: EvidenceKey, conclusion: EvidenceKey },
    /// `E(part, A) <= E(whole, A)` where `whole` is a sum containing `part`.
    Sum { part: EvidenceKey, whole: EvidenceKey },
}

impl Constraint {
    pub fn conclusion(&self) -> &EvidenceKey {
        match self {
            Constraint::Application { conclusion, .. } => conclusion,
            Constraint::Sum { whole, .. } => whole,
        }
    }

    /// The left-hand side at world `w`.
    pub fn lower_bound(&self, m: &FittingModel, w: usize) -> TruthValue {
        match self {
            Constraint::Application { major, minor, .. } => {
                m.tnorm().tnorm(&m.evid_key(w, major), &m.evid_key(w, minor))
            }
            Constraint::Sum { part, .. } => m.evid_key(w, part),
        }
    }
}

/// Pairs, conditions and forced pairs of the relevant closure.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Closure {
    /// The base set: relevant justified pairs and tabled keys.
    pub pairs: BTreeSet<EvidenceKey>,
    pub constraints: Vec<Constraint>,
    /// Pairs whose evidence the constant specification fixes at 1.
    pub forced: BTreeSet<EvidenceKey>,
}

pub fn relevant_closure(
    m: &FittingModel,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    relevant: &[Formula],
) -> Closure {
    let mut pairs: BTreeSet<EvidenceKey> = relevant.iter().flat_map(|f| f.justified_pairs()).collect();
    for w in 0..m.world_count() {
        pairs.extend(m.evid_entries(w).map(|(k, _)| k.clone()));
    }
    let cs_pairs = if config.justified { cs.pairs(config) } else { Vec::new() };
    pairs.extend(cs_pairs.iter().cloned());
    closure_of(pairs, config, cs, &cs_pairs)
}

pub(crate) fn closure_of(
    pairs: BTreeSet<EvidenceKey>,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    cs_pairs: &[EvidenceKey],
) -> Closure {
    let mut by_formula: BTreeMap<&Formula, Vec<&EvidenceKey>> = BTreeMap::new();
    for p in &pairs {
        by_formula.entry(&p.1).or_default().push(p);
    }
    let mut constraints = Vec::new();
    for major in &pairs {
        let Some((antecedent, consequent)) = major.1.as_implication() else { continue };
        for minor in by_formula.get(antecedent).into_iter().flatten() {
            let conclusion = (Term::app(major.0.clone(), minor.0.clone()), consequent.clone());
            constraints.push(Constraint::Application { major: major.clone(), minor: (*minor).clone(), conclusion });
        }
    }
    for whole in &pairs {
        if let Term::Sum(l, r) = &whole.0 {
            for part in [l, r] {
                let part = ((**part).clone(), whole.1.clone());
                constraints.push(Constraint::Sum { part, whole: whole.clone() });
            }
        }
    }
    for same in by_formula.values() {
        for s in same {
            for t in same {
                for whole in [Term::sum(s.0.clone(), t.0.clone()), Term::sum(t.0.clone(), s.0.clone())] {
                    constraints.push(Constraint::Sum { part: (*s).clone(), whole: (whole, s.1.clone()) });
                }
            }
        }
    }
    constraints.sort_unstable();
    constraints.dedup();
    let mut forced: BTreeSet<EvidenceKey> = cs_pairs.iter().cloned().collect();
    if config.justified {
        forced.extend(pairs.iter().filter(|(c, body)| cs.justifies(c, body, config)).cloned());
    }
    Closure { pairs, constraints, forced }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TNorm { found: TNormKind, logic: String },
    NonBoolean,
    Frame { property: FrameProperty },
    Fe1 { world: String, constraint: Constraint, lower: TruthValue, value: TruthValue },
    Fe2 { world: String, constraint: Constraint, lower: TruthValue, value: TruthValue },
    Fe3 { world: String, pair: EvidenceKey, value: TruthValue },
}

fn key(k: &EvidenceKey) -> String {
    format!("E({}, {})", k.0, k.1)
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TNorm { found, logic } => write!(f, "t-norm {found} is not admissible for {logic}"),
            Violation::NonBoolean => f.write_str("a two-valued logic needs 0/1 valuations and evidence"),
            Violation::Frame { property } => write!(f, "accessibility is not {property}"),
            Violation::Fe1 { world, constraint, lower, value } => {
                let Constraint::Application { major, minor, conclusion } = constraint else { unreachable!() };
                write!(f, "FE1 at {world}: {} * {} = {lower} > {} = {value}", key(major), key(minor), key(conclusion))
            }
            Violation::Fe2 { world, constraint, lower, value } => {
                let Constraint::Sum { part, whole } = constraint else { unreachable!() };
                write!(f, "FE2 at {world}: {} = {lower} > {} = {value}", key(part), key(whole))
            }
            Violation::Fe3 { world, pair, value } => {
                write!(f, "FE3 at {world}: {} = {value} for a constant specification entry", key(pair))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub pairs: usize,
    pub constraints: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the t-norm, two-valuedness, frame conditions and the evidence
/// conditions over the relevant closure of `relevant`.
pub fn validate_model(
    m: &FittingModel,
    config: &LogicConfig,
    cs: &ConstantSpecification,
    relevant: &[Formula],
) -> ValidationReport {
    let mut violations = Vec::new();
    if !config.allowed_tnorms().contains(&m.tnorm()) {
        violations.push(Violation::TNorm { found: m.tnorm(), logic: config.name() });
    }
    if config.crisp && !m.is_boolean() {
        violations.push(Violation::NonBoolean);
    }
    for property in FrameProperty::required_by(config) {
        if !property.holds(m) {
            violations.push(Violation::Frame { property });
        }
    }
    let closure = relevant_closure(m, config, cs, relevant);
    if config.justified {
        for w in 0..m.world_count() {
            let world = m.world_name(w).to_string();
            for pair in &closure.forced {
                let value = m.evid_key(w, pair);
                if !value.is_one() {
                    violations.push(Violation::Fe3 { world: world.clone(), pair: pair.clone(), value });
                }
            }
            for c in &closure.constraints {
                let value = m.evid_key(w, c.conclusion());
                if value.is_one() {
                    continue;
                }
                let lower = c.lower_bound(m, w);
                if lower > value {
                    let world = world.clone();
                    let constraint = c.clone();
                    violations.push(match c {
                        Constraint::Application { .. } => Violation::Fe1 { world, constraint, lower, value },
                        Constraint::Sum { .. } => Violation::Fe2 { world, constraint, lower, value },
                    });
                }
            }
        }
    }
    ValidationReport { pairs: closure.pairs.len(), constraints: closure.constraints.len(), violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> Formula {
        text.parse().unwrap()
    }

    fn base() -> FittingModel {
        let mut m = FittingModel::new(&["w"], TNormKind::Lukasiewicz).unwrap();
        m.add_access(0, 0);
        m
    }

    #[test]
    fn application_violation() {
        let mut m = base();
        let (s, t) = (Term::var("s"), Term::var("t"));
        m.set_evid(0, &s, &f("p -> q"), TruthValue::one());
        m.set_evid(0, &t, &f("p"), TruthValue::one());
        m.set_evid(0, &Term::app(s, t), &f("q"), TruthValue::ratio(1, 2));
        let report = validate_model(&m, &LogicConfig::lj(), &ConstantSpecification::empty(), &[]);
        assert!(matches!(report.violations.as_slice(), [Violation::Fe1 { .. }]), "{:?}", report.violations);
    }

    #[test]
    fn sum_violation_and_untabled_defaults() {
        let mut m = base();
        m.set_evid(0, &Term::var("s"), &f("p"), TruthValue::ratio(2, 3));
        m.set_evid(0, &Term::sum(Term::var("t"), Term::var("s")), &f("p"), TruthValue::ratio(1, 3));
        let report = validate_model(&m, &LogicConfig::lj(), &ConstantSpecification::empty(), &[]);
        // Both `s` and the untabled `t` (default 1) exceed `t+s`.
        assert_eq!(report.violations.len(), 2);
        assert!(report.violations.iter().all(|v| matches!(v, Violation::Fe2 { .. })));
        m.set_evid(0, &Term::var("t"), &f("p"), TruthValue::ratio(1, 2));
        m.set_evid(0, &Term::sum(Term::var("t"), Term::var("s")), &f("p"), TruthValue::ratio(2, 3));
        assert!(validate_model(&m, &LogicConfig::lj(), &ConstantSpecification::empty(), &[f("s+s:p")]).passed());
    }

    #[test]
    fn constant_specification_violation() {
        let mut m = base();
        let c = Term::constant("c");
        m.set_evid(0, &c, &f("p -> p"), TruthValue::ratio(3, 4));
        let cs = ConstantSpecification::finite([f("c:(p -> p)")]);
        let report = validate_model(&m, &LogicConfig::lj(), &cs, &[]);
        assert!(matches!(&report.violations[..], [Violation::Fe3 { value, .. }] if *value == TruthValue::ratio(3, 4)));
        m.set_evid(0, &c, &f("p -> p"), TruthValue::one());
        assert!(validate_model(&m, &LogicConfig::lj(), &cs, &[]).passed());
    }

    #[test]
    fn frame_tnorm_and_crispness() {
        let mut m = FittingModel::new(&["w", "v"], TNormKind::Product).unwrap();
        m.add_access(0, 1);
        let config = LogicConfig::gj().with_jt();
        let kinds: Vec<_> = validate_model(&m, &config, &ConstantSpecification::empty(), &[]).violations;
        assert!(kinds.contains(&Violation::Frame { property: FrameProperty::Reflexive }));
        assert!(kinds.iter().any(|v| matches!(v, Violation::TNorm { .. })));
        m.set_val(0, "p", TruthValue::ratio(1, 2));
        let j = validate_model(&m, &LogicConfig::j(), &ConstantSpecification::empty(), &[]);
        assert!(j.violations.contains(&Violation::NonBoolean));
    }
}
