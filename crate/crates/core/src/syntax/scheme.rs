//! Schemes with formula, term and rational metavariables, and first-order
//! matching of concrete formulas against them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::{Formula, Term};
use crate::truth::TruthValue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalPattern {
    Fixed(TruthValue),
    Meta(Arc<str>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermPattern {
    Meta(Arc<str>),
    Atom(Term),
    App(Box<TermPattern>, Box<TermPattern>),
    Sum(Box<TermPattern>, Box<TermPattern>),
}

/// A primitive-connective formula with holes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    Meta(Arc<str>),
    Prop(Arc<str>),
    Const(RationalPattern),
    Conj(Box<Pattern>, Box<Pattern>),
    Imp(Box<Pattern>, Box<Pattern>),
    Just(TermPattern, Box<Pattern>),
}

impl Pattern {
    pub fn meta(name: &str) -> Pattern {
        Pattern::Meta(name.into())
    }

    pub fn rational(name: &str) -> Pattern {
        Pattern::Const(RationalPattern::Meta(name.into()))
    }

    pub fn conj(a: Pattern, b: Pattern) -> Pattern {
        Pattern::Conj(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Pattern, b: Pattern) -> Pattern {
        Pattern::Imp(Box::new(a), Box::new(b))
    }

    /// `A == B` in primitive form.
    pub fn equiv(a: Pattern, b: Pattern) -> Pattern {
        Pattern::conj(Pattern::imp(a.clone(), b.clone()), Pattern::imp(b, a))
    }

    /// Reads a template formula: single upper-case letters become formula
    /// metavariables and single-letter term variables become term
    /// metavariables. The template is expanded to primitive form first.
    pub fn from_template(template: &Formula) -> Pattern {
        fn term(t: &Term) -> TermPattern {
            match t {
                Term::Var(name) if name.len() == 1 => TermPattern::Meta(name.clone()),
                Term::Var(_) | Term::Const(_) => TermPattern::Atom(t.clone()),
                Term::App(l, r) => TermPattern::App(Box::new(term(l)), Box::new(term(r))),
                Term::Sum(l, r) => TermPattern::Sum(Box::new(term(l)), Box::new(term(r))),
            }
        }
        fn go(f: &Formula) -> Pattern {
            match f {
                Formula::Prop(name) if name.len() == 1 && name.chars().all(|c| c.is_ascii_uppercase()) => {
                    Pattern::Meta(name.clone())
                }
                Formula::Prop(name) => Pattern::Prop(name.clone()),
                Formula::Const(r) => Pattern::Const(RationalPattern::Fixed(r.clone())),
                Formula::StrongConj(a, b) => Pattern::conj(go(a), go(b)),
                Formula::Implies(a, b) => Pattern::imp(go(a), go(b)),
                Formula::Justified(t, a) => Pattern::Just(term(t), Box::new(go(a))),
                other => go(&other.expand()),
            }
        }
        go(&template.expand())
    }
}

/// Values bound to metavariables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    pub formulas: BTreeMap<Arc<str>, Formula>,
    pub terms: BTreeMap<Arc<str>, Term>,
    pub rationals: BTreeMap<Arc<str>, TruthValue>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn formula(mut self, name: &str, f: Formula) -> Self {
        self.formulas.insert(name.into(), f.expand());
        self
    }

    pub fn term(mut self, name: &str, t: Term) -> Self {
        self.terms.insert(name.into(), t);
        self
    }

    pub fn rational(mut self, name: &str, r: TruthValue) -> Self {
        self.rationals.insert(name.into(), r);
        self
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        parts.extend(self.formulas.iter().map(|(k, v)| format!("{k} := {v}")));
        parts.extend(self.terms.iter().map(|(k, v)| format!("{k} := {v}")));
        parts.extend(self.rationals.iter().map(|(k, v)| format!("{k} := {v}")));
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A rational metavariable computed from two others (TC1, TC2).
#[derive(Debug, Clone)]
pub struct SideComputation {
    pub target: Arc<str>,
    pub inputs: [Arc<str>; 2],
    pub op: fn(&TruthValue, &TruthValue) -> TruthValue,
}

#[derive(Debug, Clone)]
pub struct Scheme {
    pub name: Arc<str>,
    pub pattern: Pattern,
    pub side: Option<SideComputation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstantiateError {
    #[error("metavariable `{0}` is not bound")]
    Unbound(String),
}

impl Scheme {
    pub fn new(name: &str, pattern: Pattern) -> Self {
        Scheme { name: name.into(), pattern, side: None }
    }

    pub fn with_side(mut self, side: SideComputation) -> Self {
        self.side = Some(side);
        self
    }

    /// Matches an expanded formula. Repeated metavariables must bind equal
    /// subtrees, and a side computation must reproduce its target.
    pub fn matches(&self, f: &Formula) -> Option<Substitution> {
        let mut sigma = Substitution::new();
        if !match_pattern(&self.pattern, f, &mut sigma) {
            return None;
        }
        if let Some(side) = &self.side {
            let x = sigma.rationals.get(&side.inputs[0])?;
            let y = sigma.rationals.get(&side.inputs[1])?;
            let expected = (side.op)(x, y);
            if sigma.rationals.get(&side.target) != Some(&expected) {
                return None;
            }
        }
        Some(sigma)
    }

    /// Builds the instance for `sigma`, computing the side target if absent.
    pub fn instantiate(&self, sigma: &Substitution) -> Result<Formula, InstantiateError> {
        let mut sigma = sigma.clone();
        if let Some(side) = &self.side {
            let get =
                |k: &Arc<str>| sigma.rationals.get(k).cloned().ok_or_else(|| InstantiateError::Unbound(k.to_string()));
            let value = (side.op)(&get(&side.inputs[0])?, &get(&side.inputs[1])?);
            sigma.rationals.insert(side.target.clone(), value);
        }
        build(&self.pattern, &sigma)
    }

    /// Metavariables of each sort, in order of first occurrence.
    pub fn metavariables(&self) -> (Vec<Arc<str>>, Vec<Arc<str>>, Vec<Arc<str>>) {
        let mut formulas = Vec::new();
        let mut terms = Vec::new();
        let mut rationals = Vec::new();
        collect_metas(&self.pattern, &mut formulas, &mut terms, &mut rationals);
        if let Some(side) = &self.side {
            rationals.retain(|r| *r != side.target);
        }
        (formulas, terms, rationals)
    }
}

/// First-order matching of an expanded formula against a scheme.
pub fn match_scheme(scheme: &Scheme, f: &Formula) -> Option<Substitution> {
    scheme.matches(f)
}

fn match_pattern(p: &Pattern, f: &Formula, sigma: &mut Substitution) -> bool {
    match (p, f) {
        (Pattern::Meta(name), _) => bind(&mut sigma.formulas, name, f),
        (Pattern::Prop(a), Formula::Prop(b)) => a == b,
        (Pattern::Const(RationalPattern::Fixed(r)), Formula::Const(s)) => r == s,
        (Pattern::Const(RationalPattern::Meta(name)), Formula::Const(s)) => bind(&mut sigma.rationals, name, s),
        (Pattern::Conj(pa, pb), Formula::StrongConj(a, b)) | (Pattern::Imp(pa, pb), Formula::Implies(a, b)) => {
            match_pattern(pa, a, sigma) && match_pattern(pb, b, sigma)
        }
        (Pattern::Just(tp, pa), Formula::Justified(t, a)) => match_term(tp, t, sigma) && match_pattern(pa, a, sigma),
        _ => false,
    }
}

fn match_term(p: &TermPattern, t: &Term, sigma: &mut Substitution) -> bool {
    match (p, t) {
        (TermPattern::Meta(name), _) => bind(&mut sigma.terms, name, t),
        (TermPattern::Atom(a), _) => a == t,
        (TermPattern::App(pl, pr), Term::App(l, r)) | (TermPattern::Sum(pl, pr), Term::Sum(l, r)) => {
            match_term(pl, l, sigma) && match_term(pr, r, sigma)
        }
        _ => false,
    }
}

fn bind<T: Clone + PartialEq>(map: &mut BTreeMap<Arc<str>, T>, name: &Arc<str>, value: &T) -> bool {
    match map.get(name) {
        Some(bound) => bound == value,
        None => {
            map.insert(name.clone(), value.clone());
            true
        }
    }
}

fn build(p: &Pattern, sigma: &Substitution) -> Result<Formula, InstantiateError> {
    let unbound = |name: &Arc<str>| InstantiateError::Unbound(name.to_string());
    Ok(match p {
        Pattern::Meta(name) => sigma.formulas.get(name).cloned().ok_or_else(|| unbound(name))?,
        Pattern::Prop(name) => Formula::Prop(name.clone()),
        Pattern::Const(RationalPattern::Fixed(r)) => Formula::Const(r.clone()),
        Pattern::Const(RationalPattern::Meta(name)) => {
            Formula::Const(sigma.rationals.get(name).cloned().ok_or_else(|| unbound(name))?)
        }
        Pattern::Conj(a, b) => Formula::conj(build(a, sigma)?, build(b, sigma)?),
        Pattern::Imp(a, b) => Formula::imp(build(a, sigma)?, build(b, sigma)?),
        Pattern::Just(t, a) => Formula::just(build_term(t, sigma)?, build(a, sigma)?),
    })
}

fn build_term(p: &TermPattern, sigma: &Substitution) -> Result<Term, InstantiateError> {
    Ok(match p {
        TermPattern::Meta(name) => {
            sigma.terms.get(name).cloned().ok_or_else(|| InstantiateError::Unbound(name.to_string()))?
        }
        TermPattern::Atom(t) => t.clone(),
        TermPattern::App(l, r) => Term::app(build_term(l, sigma)?, build_term(r, sigma)?),
        TermPattern::Sum(l, r) => Term::sum(build_term(l, sigma)?, build_term(r, sigma)?),
    })
}

fn collect_metas(p: &Pattern, fs: &mut Vec<Arc<str>>, ts: &mut Vec<Arc<str>>, rs: &mut Vec<Arc<str>>) {
    fn push(v: &mut Vec<Arc<str>>, name: &Arc<str>) {
        if !v.contains(name) {
            v.push(name.clone());
        }
    }
    fn term_metas(p: &TermPattern, ts: &mut Vec<Arc<str>>) {
        match p {
            TermPattern::Meta(name) => push(ts, name),
            TermPattern::Atom(_) => {}
            TermPattern::App(l, r) | TermPattern::Sum(l, r) => {
                term_metas(l, ts);
                term_metas(r, ts);
            }
        }
    }
    match p {
        Pattern::Meta(name) => push(fs, name),
        Pattern::Prop(_) | Pattern::Const(RationalPattern::Fixed(_)) => {}
        Pattern::Const(RationalPattern::Meta(name)) => push(rs, name),
        Pattern::Conj(a, b) | Pattern::Imp(a, b) => {
            collect_metas(a, fs, ts, rs);
            collect_metas(b, fs, ts, rs);
        }
        Pattern::Just(t, a) => {
            term_metas(t, ts);
            collect_metas(a, fs, ts, rs);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TNormKind;

    fn f(text: &str) -> Formula {
        text.parse::<Formula>().unwrap().expand()
    }

    fn scheme(name: &str, template: &str) -> Scheme {
        Scheme::new(name, Pattern::from_template(&template.parse().unwrap()))
    }

    fn tc2() -> Scheme {
        let pattern =
            Pattern::equiv(Pattern::conj(Pattern::rational("r"), Pattern::rational("q")), Pattern::rational("s"));
        Scheme::new("TC2", pattern).with_side(SideComputation {
            target: "s".into(),
            inputs: ["r".into(), "q".into()],
            op: |x, y| TNormKind::Lukasiewicz.tnorm(x, y),
        })
    }

    #[test]
    fn matches_bl2() {
        let bl2 = scheme("BL2", "(A & B) -> A");
        let sigma = bl2.matches(&f("(p & q) -> p")).unwrap();
        assert_eq!(sigma.formulas["A"], f("p"));
        assert_eq!(sigma.formulas["B"], f("q"));
        assert_eq!(bl2.instantiate(&sigma).unwrap(), f("(p & q) -> p"));
        assert!(bl2.matches(&f("p -> p")).is_none());
    }

    #[test]
    fn repeated_metavariables_must_agree() {
        let k = scheme("K", "A -> (B -> A)");
        assert!(k.matches(&f("p -> (q -> r)")).is_none());
        assert!(k.matches(&f("p -> (q -> p)")).is_some());
    }

    #[test]
    fn term_metavariables() {
        let appl = scheme("Appl", "s:(A -> B) -> (t:A -> s.t:B)");
        assert!(appl.matches(&f("x:(p -> q) -> (y:p -> x.y:q)")).is_some());
        assert!(appl.matches(&f("x:(p -> q) -> (y:p -> y.x:q)")).is_none());
    }

    #[test]
    fn side_computation_for_truth_constants() {
        let tc2 = tc2();
        let instance = f("(#1/2 & #2/3) == #1/6");
        let sigma = tc2.matches(&instance).unwrap();
        assert_eq!(sigma.rationals["r"], TruthValue::ratio(1, 2));
        assert_eq!(sigma.rationals["q"], TruthValue::ratio(2, 3));
        assert!(tc2.matches(&f("(#1/2 & #2/3) == #1/3")).is_none());
        let built = tc2
            .instantiate(
                &Substitution::new().rational("r", TruthValue::ratio(1, 2)).rational("q", TruthValue::ratio(2, 3)),
            )
            .unwrap();
        assert_eq!(built, instance);
    }
}
