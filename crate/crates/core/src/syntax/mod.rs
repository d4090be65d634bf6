//! Justification terms and formulas.
//!
//! Formulas keep their defined connectives (`~`, `/\`, `\/`, `==`, `<->` and
//! graded assertions) as explicit nodes so that printing reproduces what was
//! parsed. [`Formula::expand`] rewrites them into the primitive connectives
//! `#r`, `&`, `->` and `t:A`; semantics, scheme matching and proof checking
//! all operate on expanded formulas.

mod lexer;
mod parser;
mod printer;
pub mod scheme;

use std::sync::Arc;

use crate::truth::TruthValue;

pub use parser::{parse_formula, parse_term, ParseError};
pub use printer::print_formula;

/// A justification term `x | c | s.t | s+t`.
///
/// Identifiers beginning with `c` are constants, all others are variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Arc<str>),
    Const(Arc<str>),
    App(Arc<Term>, Arc<Term>),
    Sum(Arc<Term>, Arc<Term>),
}

impl Term {
    /// Classifies `name` as a constant or a variable.
    pub fn atom(name: &str) -> Term {
        if Self::is_constant_name(name) {
            Term::Const(name.into())
        } else {
            Term::Var(name.into())
        }
    }

    pub fn is_constant_name(name: &str) -> bool {
        name.starts_with('c')
    }

    pub fn var(name: &str) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(name.into())
    }

    pub fn app(left: Term, right: Term) -> Term {
        Term::App(Arc::new(left), Arc::new(right))
    }

    pub fn sum(left: Term, right: Term) -> Term {
        Term::Sum(Arc::new(left), Arc::new(right))
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Term::Const(_))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Term::Var(_) | Term::Const(_))
    }

    /// Number of atoms and operators.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) => 1,
            Term::App(l, r) | Term::Sum(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Variable names in left-to-right order, without repetition.
    pub fn variables(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut Vec<Arc<str>>) {
        match self {
            Term::Var(name) => {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
            Term::Const(_) => {}
            Term::App(l, r) | Term::Sum(l, r) => {
                l.collect_variables(out);
                r.collect_variables(out);
            }
        }
    }
}

/// Direction of a graded justification assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GradeBound {
    /// `t:{>=r}A := #r -> t:A`
    AtLeast,
    /// `t:{<=r}A := t:A -> #r`
    AtMost,
    /// `t:{==r}A := t:{>=r}A /\ t:{<=r}A`
    Exact,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grade {
    pub bound: GradeBound,
    pub value: TruthValue,
}

impl Grade {
    pub fn at_least(value: TruthValue) -> Self {
        Grade { bound: GradeBound::AtLeast, value }
    }

    pub fn at_most(value: TruthValue) -> Self {
        Grade { bound: GradeBound::AtMost, value }
    }

    pub fn exact(value: TruthValue) -> Self {
        Grade { bound: GradeBound::Exact, value }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Prop(Arc<str>),
    /// Truth constant `#r`; `#0` is falsity.
    Const(TruthValue),
    StrongConj(Arc<Formula>, Arc<Formula>),
    Implies(Arc<Formula>, Arc<Formula>),
    Justified(Term, Arc<Formula>),
    /// `~A := A -> #0`
    Neg(Arc<Formula>),
    /// `A /\ B := A & (A -> B)`
    WeakConj(Arc<Formula>, Arc<Formula>),
    /// `A \/ B := ((A -> B) -> B) /\ ((B -> A) -> A)`
    WeakDisj(Arc<Formula>, Arc<Formula>),
    /// `A == B := (A -> B) & (B -> A)`
    Equiv(Arc<Formula>, Arc<Formula>),
    /// `A <-> B := (A -> B) /\ (B -> A)`
    BiImpl(Arc<Formula>, Arc<Formula>),
    Graded {
        term: Term,
        grade: Grade,
        body: Arc<Formula>,
    },
}

impl Formula {
    pub fn prop(name: &str) -> Formula {
        Formula::Prop(name.into())
    }

    pub fn constant(value: TruthValue) -> Formula {
        Formula::Const(value)
    }

    pub fn bottom() -> Formula {
        Formula::Const(TruthValue::zero())
    }

    pub fn top() -> Formula {
        Formula::Const(TruthValue::one())
    }

    pub fn conj(a: Formula, b: Formula) -> Formula {
        Formula::StrongConj(Arc::new(a), Arc::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Arc::new(a), Arc::new(b))
    }

    pub fn just(t: Term, a: Formula) -> Formula {
        Formula::Justified(t, Arc::new(a))
    }

    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Arc::new(a))
    }

    pub fn weak_conj(a: Formula, b: Formula) -> Formula {
        Formula::WeakConj(Arc::new(a), Arc::new(b))
    }

    pub fn weak_disj(a: Formula, b: Formula) -> Formula {
        Formula::WeakDisj(Arc::new(a), Arc::new(b))
    }

    pub fn equiv(a: Formula, b: Formula) -> Formula {
        Formula::Equiv(Arc::new(a), Arc::new(b))
    }

    pub fn biimpl(a: Formula, b: Formula) -> Formula {
        Formula::BiImpl(Arc::new(a), Arc::new(b))
    }

    pub fn graded(term: Term, grade: Grade, body: Formula) -> Formula {
        Formula::Graded { term, grade, body: Arc::new(body) }
    }

    /// `t:{>=r}A`
    pub fn at_least(term: Term, r: TruthValue, body: Formula) -> Formula {
        Self::graded(term, Grade::at_least(r), body)
    }

    /// `t:{<=r}A`
    pub fn at_most(term: Term, r: TruthValue, body: Formula) -> Formula {
        Self::graded(term, Grade::at_most(r), body)
    }

    /// `t:{==r}A`
    pub fn exactly(term: Term, r: TruthValue, body: Formula) -> Formula {
        Self::graded(term, Grade::exact(r), body)
    }

    /// The graded formula `#r -> A`.
    pub fn graded_fact(r: TruthValue, a: Formula) -> Formula {
        Self::imp(Formula::Const(r), a)
    }

    /// Left-nested strong power `A & ... & A` with `n` copies.
    pub fn power(a: &Formula, n: usize) -> Option<Formula> {
        if n == 0 {
            return None;
        }
        let mut acc = a.clone();
        for _ in 1..n {
            acc = Formula::conj(acc, a.clone());
        }
        Some(acc)
    }

    pub fn is_primitive(&self) -> bool {
        match self {
            Formula::Prop(_) | Formula::Const(_) => true,
            Formula::StrongConj(a, b) | Formula::Implies(a, b) => a.is_primitive() && b.is_primitive(),
            Formula::Justified(_, a) => a.is_primitive(),
            _ => false,
        }
    }

    /// Rewrites every defined connective into `#r`, `&`, `->` and `t:A`.
    pub fn expand(&self) -> Formula {
        match self {
            Formula::Prop(_) | Formula::Const(_) => self.clone(),
            Formula::StrongConj(a, b) => Formula::conj(a.expand(), b.expand()),
            Formula::Implies(a, b) => Formula::imp(a.expand(), b.expand()),
            Formula::Justified(t, a) => Formula::just(t.clone(), a.expand()),
            Formula::Neg(a) => Formula::imp(a.expand(), Formula::bottom()),
            Formula::WeakConj(a, b) => expand_weak_conj(a.expand(), b.expand()),
            Formula::WeakDisj(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                let left = Formula::imp(Formula::imp(a.clone(), b.clone()), b.clone());
                let right = Formula::imp(Formula::imp(b, a.clone()), a);
                expand_weak_conj(left, right)
            }
            Formula::Equiv(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                Formula::conj(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
            }
            Formula::BiImpl(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                expand_weak_conj(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
            }
            Formula::Graded { term, grade, body } => {
                let justified = Formula::just(term.clone(), body.expand());
                let bar = Formula::Const(grade.value.clone());
                let at_least = || Formula::imp(bar.clone(), justified.clone());
                let at_most = || Formula::imp(justified.clone(), bar.clone());
                match grade.bound {
                    GradeBound::AtLeast => at_least(),
                    GradeBound::AtMost => at_most(),
                    GradeBound::Exact => expand_weak_conj(at_least(), at_most()),
                }
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Prop(_) | Formula::Const(_) => 1,
            Formula::Neg(a) | Formula::Justified(_, a) | Formula::Graded { body: a, .. } => 1 + a.size(),
            Formula::StrongConj(a, b)
            | Formula::Implies(a, b)
            | Formula::WeakConj(a, b)
            | Formula::WeakDisj(a, b)
            | Formula::Equiv(a, b)
            | Formula::BiImpl(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Prop(_) | Formula::Const(_) => 0,
            Formula::Neg(a) | Formula::Justified(_, a) | Formula::Graded { body: a, .. } => 1 + a.depth(),
            Formula::StrongConj(a, b)
            | Formula::Implies(a, b)
            | Formula::WeakConj(a, b)
            | Formula::WeakDisj(a, b)
            | Formula::Equiv(a, b)
            | Formula::BiImpl(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Contains a justification assertion (plain or graded).
    pub fn has_justification(&self) -> bool {
        match self {
            Formula::Prop(_) | Formula::Const(_) => false,
            Formula::Justified(..) | Formula::Graded { .. } => true,
            Formula::Neg(a) => a.has_justification(),
            Formula::StrongConj(a, b)
            | Formula::Implies(a, b)
            | Formula::WeakConj(a, b)
            | Formula::WeakDisj(a, b)
            | Formula::Equiv(a, b)
            | Formula::BiImpl(a, b) => a.has_justification() || b.has_justification(),
        }
    }

    /// Propositional letters, in order of first occurrence.
    pub fn props(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.visit(&mut |f| {
            if let Formula::Prop(p) = f {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
        });
        out
    }

    /// Truth constants occurring in the formula or as grades.
    pub fn constants(&self) -> Vec<TruthValue> {
        let mut out = Vec::new();
        self.visit(&mut |f| {
            let value = match f {
                Formula::Const(r) => Some(r),
                Formula::Graded { grade, .. } => Some(&grade.value),
                _ => None,
            };
            if let Some(r) = value {
                if !out.contains(r) {
                    out.push(r.clone());
                }
            }
        });
        out
    }

    /// All `(t, A)` pairs of justified subformulas `t:A` of the expanded
    /// formula, innermost first.
    pub fn justified_pairs(&self) -> Vec<(Term, Formula)> {
        let mut out = Vec::new();
        collect_pairs(&self.expand(), &mut out);
        out
    }

    /// Pre-order traversal of all subformula nodes.
    pub fn visit<'a>(&'a self, f: &mut dyn FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Prop(_) | Formula::Const(_) => {}
            Formula::Neg(a) | Formula::Justified(_, a) | Formula::Graded { body: a, .. } => a.visit(f),
            Formula::StrongConj(a, b)
            | Formula::Implies(a, b)
            | Formula::WeakConj(a, b)
            | Formula::WeakDisj(a, b)
            | Formula::Equiv(a, b)
            | Formula::BiImpl(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    /// Splits an expanded implication.
    pub fn as_implication(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Implies(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_conjunction(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::StrongConj(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_justified(&self) -> Option<(&Term, &Formula)> {
        match self {
            Formula::Justified(t, a) => Some((t, a)),
            _ => None,
        }
    }

    /// Recognizes the expansion of `t:{==1}A` and returns `(t, A)`.
    pub fn as_expanded_exact_one(&self) -> Option<(&Term, &Formula)> {
        let (left, rest) = self.as_conjunction()?;
        let (one, justified) = left.as_implication()?;
        let (again, right) = rest.as_implication()?;
        let (justified2, one2) = right.as_implication()?;
        let is_one = |f: &Formula| matches!(f, Formula::Const(r) if r.is_one());
        if !is_one(one) || !is_one(one2) || again != left || justified2 != justified {
            return None;
        }
        justified.as_justified()
    }
}

fn collect_pairs(f: &Formula, out: &mut Vec<(Term, Formula)>) {
    match f {
        Formula::Prop(_) | Formula::Const(_) => {}
        Formula::StrongConj(a, b) | Formula::Implies(a, b) => {
            collect_pairs(a, out);
            collect_pairs(b, out);
        }
        Formula::Justified(t, a) => {
            collect_pairs(a, out);
            let pair = (t.clone(), (**a).clone());
            if !out.contains(&pair) {
                out.push(pair);
            }
        }
        other => collect_pairs(&other.expand(), out),
    }
}

fn expand_weak_conj(a: Formula, b: Formula) -> Formula {
    Formula::conj(a.clone(), Formula::imp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> Formula {
        text.parse().unwrap()
    }

    #[test]
    fn negation_expands_to_implication_of_falsity() {
        assert_eq!(f("~p").expand(), f("p -> #0"));
    }

    #[test]
    fn at_least_expands_to_graded_implication() {
        assert_eq!(f("t:{>=1/2}p").expand(), f("#1/2 -> t:p"));
        assert_eq!(f("t:{<=1/2}p").expand(), f("t:p -> #1/2"));
    }

    #[test]
    fn exact_grade_expands_through_weak_conjunction() {
        let expected = f("(#1 -> t:p) & ((#1 -> t:p) -> (t:p -> #1))");
        assert_eq!(f("t:{==1}p").expand(), expected);
        assert_eq!(f("t:{==1}p").expand(), f("(#1 -> t:p) /\\ (t:p -> #1)").expand());
        let (t, body) = expected.as_expanded_exact_one().unwrap();
        assert_eq!(t, &Term::var("t"));
        assert_eq!(body, &f("p"));
    }

    #[test]
    fn disjunction_and_equivalences() {
        assert_eq!(f("p \\/ q").expand(), f("((p -> q) -> q) /\\ ((q -> p) -> p)").expand());
        assert_eq!(f("p == q").expand(), f("(p -> q) & (q -> p)"));
        assert_eq!(f("p <-> q").expand(), f("(p -> q) & ((p -> q) -> (q -> p))"));
    }

    #[test]
    fn expansion_is_idempotent_and_primitive() {
        let g = f("~(s:{==1/3}(p \\/ q) <-> (p == ~q))");
        let once = g.expand();
        assert!(once.is_primitive());
        assert_eq!(once.expand(), once);
    }

    #[test]
    fn power_is_left_nested() {
        let p = f("p");
        assert_eq!(Formula::power(&p, 1), Some(p.clone()));
        assert_eq!(Formula::power(&p, 3), Some(f("(p & p) & p")));
        assert_eq!(Formula::power(&p, 0), None);
    }

    #[test]
    fn justified_pairs_are_collected_from_expansion() {
        let pairs = f("s:(p -> q) -> (t:{>=1/2}p -> s.t:q)").justified_pairs();
        assert_eq!(pairs.len(), 3);
        assert!(pairs.contains(&(Term::var("t"), f("p"))));
    }

    #[test]
    fn term_classes() {
        assert!(Term::atom("c1").is_constant());
        assert!(!Term::atom("x1").is_constant());
        let t: Term = "(x.c1)+y".parse().unwrap();
        assert_eq!(t.size(), 5);
        assert_eq!(t.variables().len(), 2);
    }
}
