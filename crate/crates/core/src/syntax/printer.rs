//! Printing with minimal parentheses; the output re-parses to the same tree.

use std::fmt::{self, Display, Formatter};

use super::{Formula, GradeBound, Term};

impl Display for Term {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(name) | Term::Const(name) => f.write_str(name),
            Term::Sum(l, r) => {
                write!(f, "{l}+")?;
                if matches!(**r, Term::Sum(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            Term::App(l, r) => {
                if matches!(**l, Term::Sum(..)) {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                f.write_str(".")?;
                if r.is_atomic() {
                    write!(f, "{r}")
                } else {
                    write!(f, "({r})")
                }
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

// Binding strength, loosest first.
const EQUIV: u8 = 0;
const IMPLIES: u8 = 1;
const DISJ: u8 = 2;
const CONJ: u8 = 3;
const PREFIX: u8 = 4;

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Equiv(..) | Formula::BiImpl(..) => EQUIV,
        Formula::Implies(..) => IMPLIES,
        Formula::WeakDisj(..) => DISJ,
        Formula::StrongConj(..) | Formula::WeakConj(..) => CONJ,
        _ => PREFIX,
    }
}

fn operand(f: &mut Formatter<'_>, sub: &Formula, needs_parens: bool) -> fmt::Result {
    if needs_parens {
        write!(f, "({sub})")
    } else {
        write!(f, "{sub}")
    }
}

fn binary(f: &mut Formatter<'_>, a: &Formula, op: &str, b: &Formula, lvl: u8) -> fmt::Result {
    let (left_parens, right_parens) = match lvl {
        EQUIV => (level(a) <= EQUIV, level(b) <= EQUIV),
        IMPLIES => (level(a) <= IMPLIES, level(b) < IMPLIES),
        _ => (level(a) < lvl, level(b) <= lvl),
    };
    operand(f, a, left_parens)?;
    write!(f, " {op} ")?;
    operand(f, b, right_parens)
}

fn term_prefix(f: &mut Formatter<'_>, t: &Term) -> fmt::Result {
    write!(f, "{t}:")
}

impl Display for Formula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Prop(name) => f.write_str(name),
            Formula::Const(r) => write!(f, "#{r}"),
            Formula::StrongConj(a, b) => binary(f, a, "&", b, CONJ),
            Formula::WeakConj(a, b) => binary(f, a, "/\\", b, CONJ),
            Formula::WeakDisj(a, b) => binary(f, a, "\\/", b, DISJ),
            Formula::Implies(a, b) => binary(f, a, "->", b, IMPLIES),
            Formula::Equiv(a, b) => binary(f, a, "==", b, EQUIV),
            Formula::BiImpl(a, b) => binary(f, a, "<->", b, EQUIV),
            Formula::Neg(a) => {
                f.write_str("~")?;
                operand(f, a, level(a) < PREFIX)
            }
            Formula::Justified(t, a) => {
                term_prefix(f, t)?;
                operand(f, a, level(a) < PREFIX)
            }
            Formula::Graded { term, grade, body } => {
                term_prefix(f, term)?;
                let op = match grade.bound {
                    GradeBound::AtLeast => ">=",
                    GradeBound::AtMost => "<=",
                    GradeBound::Exact => "==",
                };
                write!(f, "{{{op}{}}}", grade.value)?;
                operand(f, body, level(body) < PREFIX)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

/// Renders a formula in the ASCII grammar.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use crate::syntax::{Formula, Term};
    use crate::truth::TruthValue;

    #[test]
    fn prints_examples() {
        assert_eq!(Formula::imp(Formula::bottom(), Formula::prop("p")).to_string(), "#0 -> p");
        let sum = Term::sum(Term::var("s"), Term::var("t"));
        assert_eq!(Formula::just(sum, Formula::prop("p")).to_string(), "s+t:p");
        let neg = Formula::neg(Formula::just(Term::var("t"), Formula::bottom()));
        assert_eq!(neg.to_string(), "~t:#0");
        let graded = Formula::at_least(Term::var("t"), TruthValue::ratio(2, 3), Formula::prop("p"));
        assert_eq!(graded.to_string(), "t:{>=2/3}p");
    }

    #[test]
    fn minimal_parentheses() {
        for text in [
            "(p -> q) -> r",
            "p -> q -> r",
            "p & q & r",
            "p & (q & r)",
            "(p == q) -> r",
            "p \\/ q & r",
            "(p \\/ q) & r",
            "s:(p -> q) -> t:p -> s.t:q",
            "~~p -> p",
            "x.(y.z):p",
            "(x+y).z:p",
            "x+(y+z):~p",
            "t:{==1/2}(p & q)",
            "(p <-> q) == r",
        ] {
            let f: Formula = text.parse().unwrap();
            assert_eq!(f.to_string(), text);
        }
    }
}
