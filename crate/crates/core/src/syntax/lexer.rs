use std::sync::Arc;

use crate::truth::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(Arc<str>),
    /// `#r`
    Hash(Rational),
    /// A bare rational, only meaningful inside a grade.
    Number(Rational),
    Amp,
    Arrow,
    Tilde,
    Wedge,
    Vee,
    Equiv,
    BiImpl,
    Ge,
    Le,
    Colon,
    Dot,
    Plus,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Hash(r) => format!("constant `#{r}`"),
            Tok::Number(r) => format!("number `{r}`"),
            Tok::Amp => "`&`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Wedge => "`/\\`".into(),
            Tok::Vee => "`\\/`".into(),
            Tok::Equiv => "`==`".into(),
            Tok::BiImpl => "`<->`".into(),
            Tok::Ge => "`>=`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Plus => "`+`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Spanned {
    pub tok: Tok,
    /// Byte offset of the first character.
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LexError {
    Unexpected { pos: usize, found: char },
    BadNumber { pos: usize, text: String },
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, LexError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let two = |s: &[u8]| bytes[i..].starts_with(s);
        let tok = if c == b'#' {
            i += 1;
            let end = scan_number(bytes, i);
            if end == i {
                return Err(LexError::BadNumber { pos: start, text: "#".into() });
            }
            let lit = &text[i..end];
            i = end;
            Tok::Hash(number(lit, start)?)
        } else if c.is_ascii_digit() {
            let end = scan_number(bytes, i);
            let lit = &text[i..end];
            i = end;
            Tok::Number(number(lit, start)?)
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            Tok::Ident(text[start..i].into())
        } else if two(b"->") {
            i += 2;
            Tok::Arrow
        } else if two(b"<->") {
            i += 3;
            Tok::BiImpl
        } else if two(b"/\\") {
            i += 2;
            Tok::Wedge
        } else if two(b"\\/") {
            i += 2;
            Tok::Vee
        } else if two(b"==") {
            i += 2;
            Tok::Equiv
        } else if two(b">=") {
            i += 2;
            Tok::Ge
        } else if two(b"<=") {
            i += 2;
            Tok::Le
        } else {
            i += 1;
            match c {
                b'&' => Tok::Amp,
                b'~' => Tok::Tilde,
                b':' => Tok::Colon,
                b'.' => Tok::Dot,
                b'+' => Tok::Plus,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'{' => Tok::LBrace,
                b'}' => Tok::RBrace,
                _ => {
                    let found = text[start..].chars().next().unwrap_or('?');
                    return Err(LexError::Unexpected { pos: start, found });
                }
            }
        };
        out.push(Spanned { tok, pos: start });
    }
    out.push(Spanned { tok: Tok::Eof, pos: text.len() });
    Ok(out)
}

/// End of `INT` or `INT/INT` starting at `i`.
fn scan_number(bytes: &[u8], mut i: usize) -> usize {
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    let end = digits(i);
    if end == i {
        return i;
    }
    i = end;
    if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
        i = digits(i + 1);
    }
    i
}

fn number(lit: &str, pos: usize) -> Result<Rational, LexError> {
    parse_rational(lit).map_err(|_| LexError::BadNumber { pos, text: lit.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_of_a_graded_formula() {
        let toks: Vec<Tok> = tokenize("s.t:{>=2/3}(p <-> #1)").unwrap().into_iter().map(|s| s.tok).collect();
        assert_eq!(toks.len(), 14);
        assert_eq!(toks[4], Tok::LBrace);
        assert_eq!(toks[5], Tok::Ge);
        assert!(matches!(toks[6], Tok::Number(_)));
        assert_eq!(toks[10], Tok::BiImpl);
    }

    #[test]
    fn reports_positions() {
        assert_eq!(tokenize("p & $").unwrap_err(), LexError::Unexpected { pos: 4, found: '$' });
        assert!(matches!(tokenize("#1/0"), Err(LexError::BadNumber { pos: 0, .. })));
        assert!(matches!(tokenize("# 1"), Err(LexError::BadNumber { pos: 0, .. })));
    }
}
