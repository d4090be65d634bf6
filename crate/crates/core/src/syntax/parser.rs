//! Recursive-descent parser for the ASCII grammar.
//!
//! Precedence, tightest first: prefix operators (`~`, `t:`, `t:{..}`), then
//! `&` and `/\` (left associative), `\/` (left associative), `->` (right
//! associative), and finally `==` and `<->` (non-associative). In terms `.`
//! binds tighter than `+`; both associate to the left.

use std::str::FromStr;

use thiserror::Error;

use super::lexer::{tokenize, LexError, Spanned, Tok};
use super::{Formula, Grade, GradeBound, Term};
use crate::logic::LogicConfig;
use crate::truth::{Rational, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("lexical error at offset {pos}: unexpected character `{found}`")]
    Lexical { pos: usize, found: char },
    #[error("lexical error at offset {pos}: malformed number `{text}`")]
    MalformedNumber { pos: usize, text: String },
    #[error("syntax error at offset {pos}: expected {expected}, found {found}")]
    Syntax { pos: usize, expected: String, found: String },
    #[error("constant {value} at offset {pos} lies outside [0, 1]")]
    ConstantOutOfRange { pos: usize, value: Rational },
    #[error("constant {value} at offset {pos} is not part of {logic} (only #0 and #1 are)")]
    ConstantNotAllowed { pos: usize, value: TruthValue, logic: String },
    #[error("justification assertion at offset {pos} is not part of {logic}")]
    JustificationNotAllowed { pos: usize, logic: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Lexical { pos, .. }
            | ParseError::MalformedNumber { pos, .. }
            | ParseError::Syntax { pos, .. }
            | ParseError::ConstantOutOfRange { pos, .. }
            | ParseError::ConstantNotAllowed { pos, .. }
            | ParseError::JustificationNotAllowed { pos, .. } => *pos,
        }
    }
}

impl From<LexError> for ParseError {
    fn from(e: LexError) -> Self {
        match e {
            LexError::Unexpected { pos, found } => ParseError::Lexical { pos, found },
            LexError::BadNumber { pos, text } => ParseError::MalformedNumber { pos, text },
        }
    }
}

/// Parses a formula, rejecting constructs outside the language of `config`.
/// Defined connectives are kept as written.
pub fn parse_formula(text: &str, config: &LogicConfig) -> Result<Formula, ParseError> {
    let mut parser = Parser { toks: tokenize(text)?, i: 0, config };
    let f = parser.formula()?;
    parser.expect_end()?;
    Ok(f)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let config = LogicConfig::permissive();
    let mut parser = Parser { toks: tokenize(text)?, i: 0, config: &config };
    let t = parser.term()?;
    parser.expect_end()?;
    Ok(t)
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s, &LogicConfig::permissive())
    }
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    i: usize,
    config: &'a LogicConfig,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn pos(&self) -> usize {
        self.toks[self.i].pos
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.i].tok.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        tok
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos(), expected: expected.to_string(), found: self.peek().describe() }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error("an operator or end of input"))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.implication()?;
        let make = match self.peek() {
            Tok::Equiv => Formula::equiv,
            Tok::BiImpl => Formula::biimpl,
            _ => return Ok(left),
        };
        self.bump();
        let right = self.implication()?;
        if matches!(self.peek(), Tok::Equiv | Tok::BiImpl) {
            return Err(self.error("`)` (`==` and `<->` do not associate)"));
        }
        Ok(make(left, right))
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let left = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let right = self.implication()?;
            return Ok(Formula::imp(left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.conjunction()?;
        while *self.peek() == Tok::Vee {
            self.bump();
            let right = self.conjunction()?;
            left = Formula::weak_disj(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.unary()?;
        loop {
            let make = match self.peek() {
                Tok::Amp => Formula::conj,
                Tok::Wedge => Formula::weak_conj,
                _ => return Ok(left),
            };
            self.bump();
            let right = self.unary()?;
            left = make(left, right);
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::Hash(r) => {
                self.bump();
                Ok(Formula::Const(self.truth_constant(r, pos)?))
            }
            Tok::Ident(_) | Tok::LParen => {
                if let Some(f) = self.try_justified()? {
                    return Ok(f);
                }
                match self.bump() {
                    Tok::Ident(name) => Ok(Formula::Prop(name)),
                    _ => {
                        let inner = self.formula()?;
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(inner)
                    }
                }
            }
            _ => Err(self.error("a formula")),
        }
    }

    /// Parses `term ':' grade? unary` when the input has that shape, and
    /// leaves the position untouched otherwise.
    fn try_justified(&mut self) -> Result<Option<Formula>, ParseError> {
        let start = self.i;
        let pos = self.pos();
        let term = match self.term() {
            Ok(t) if *self.peek() == Tok::Colon => t,
            _ => {
                self.i = start;
                return Ok(None);
            }
        };
        self.bump();
        if !self.config.justified {
            return Err(ParseError::JustificationNotAllowed { pos, logic: self.config.name() });
        }
        if *self.peek() == Tok::LBrace {
            self.bump();
            let bound = match self.peek() {
                Tok::Ge => GradeBound::AtLeast,
                Tok::Le => GradeBound::AtMost,
                Tok::Equiv => GradeBound::Exact,
                _ => return Err(self.error("`>=`, `<=` or `==`")),
            };
            self.bump();
            let value_pos = self.pos();
            let value = match self.peek().clone() {
                Tok::Number(r) => self.truth_constant(r, value_pos)?,
                _ => return Err(self.error("a rational grade")),
            };
            self.bump();
            self.expect(Tok::RBrace, "`}`")?;
            let body = self.unary()?;
            return Ok(Some(Formula::graded(term, Grade { bound, value }, body)));
        }
        let body = self.unary()?;
        Ok(Some(Formula::just(term, body)))
    }

    fn truth_constant(&self, r: Rational, pos: usize) -> Result<TruthValue, ParseError> {
        let value = TruthValue::new(r.clone()).map_err(|_| ParseError::ConstantOutOfRange { pos, value: r })?;
        if !value.is_boolean() && !self.config.allows_rational_constants() {
            return Err(ParseError::ConstantNotAllowed { pos, value, logic: self.config.name() });
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut left = self.term_product()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let right = self.term_product()?;
            left = Term::sum(left, right);
        }
        Ok(left)
    }

    fn term_product(&mut self) -> Result<Term, ParseError> {
        let mut left = self.term_atom()?;
        while *self.peek() == Tok::Dot {
            self.bump();
            let right = self.term_atom()?;
            left = Term::app(left, right);
        }
        Ok(left)
    }

    fn term_atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::atom(&name))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.error("a justification term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::LogicConfig;

    fn p(name: &str) -> Formula {
        Formula::prop(name)
    }

    #[test]
    fn application_axiom_shape() {
        let f: Formula = "s:(p -> q) -> (t:p -> s.t:q)".parse().unwrap();
        let s = Term::var("s");
        let t = Term::var("t");
        let expected = Formula::imp(
            Formula::just(s.clone(), Formula::imp(p("p"), p("q"))),
            Formula::imp(Formula::just(t.clone(), p("p")), Formula::just(Term::app(s, t), p("q"))),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn constants_and_grades() {
        let f: Formula = "#0 -> p".parse().unwrap();
        assert_eq!(f, Formula::imp(Formula::bottom(), p("p")));
        let g: Formula = "t:{>=2/3}p".parse().unwrap();
        assert_eq!(g, Formula::at_least(Term::var("t"), TruthValue::ratio(2, 3), p("p")));
    }

    #[test]
    fn precedence_and_associativity() {
        let f: Formula = "p & q -> r -> s".parse().unwrap();
        let expected = Formula::imp(Formula::conj(p("p"), p("q")), Formula::imp(p("r"), p("s")));
        assert_eq!(f, expected);
        let g: Formula = "s+t:p & q".parse().unwrap();
        let sum = Term::sum(Term::var("s"), Term::var("t"));
        assert_eq!(g, Formula::conj(Formula::just(sum, p("p")), p("q")));
        let h: Formula = "x.y.z+w:p".parse().unwrap();
        let t = Term::sum(Term::app(Term::app(Term::var("x"), Term::var("y")), Term::var("z")), Term::var("w"));
        assert_eq!(h, Formula::just(t, p("p")));
        let k: Formula = "(s+t).u:p".parse().unwrap();
        assert!(matches!(k, Formula::Justified(Term::App(..), _)));
    }

    #[test]
    fn parenthesized_formula_is_not_a_term() {
        let f: Formula = "(p) -> (q & r)".parse().unwrap();
        assert_eq!(f, Formula::imp(p("p"), Formula::conj(p("q"), p("r"))));
    }

    #[test]
    fn errors() {
        let bl = LogicConfig::bl();
        assert!(matches!(parse_formula("p & (q", &bl), Err(ParseError::Syntax { pos: 6, .. })));
        assert!(matches!(parse_formula("#3/2", &LogicConfig::rpl()), Err(ParseError::ConstantOutOfRange { .. })));
        assert!(matches!(parse_formula("#1/2 -> p", &bl), Err(ParseError::ConstantNotAllowed { pos: 0, .. })));
        assert!(matches!(parse_formula("t:p", &bl), Err(ParseError::JustificationNotAllowed { .. })));
        assert!(matches!(parse_formula("t:{>=1/2}p", &LogicConfig::lj()), Err(ParseError::ConstantNotAllowed { .. })));
        assert!(parse_formula("t:{>=1}p", &LogicConfig::lj()).is_ok());
        assert!(matches!(parse_formula("p == q == r", &bl), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_formula("p ! q", &bl), Err(ParseError::Lexical { pos: 2, found: '!' })));
        assert!(parse_formula("#1 -> #0", &bl).is_ok());
    }
}
