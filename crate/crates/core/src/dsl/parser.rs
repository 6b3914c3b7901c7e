use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::{Expr, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    EqEq,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => alloc::format!("number `{v}`"),
            Tok::Ident(s) => alloc::format!("symbol `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::EqEq => "`==`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let single = match b {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((start, tok));
            i += 1;
        } else if b.is_ascii_whitespace() {
            i += 1;
        } else if b == b'=' {
            if bytes.get(i + 1) == Some(&b'=') {
                out.push((start, Tok::EqEq));
                i += 2;
            } else {
                return Err(ParseError::new(start, "expected `==`"));
            }
        } else if b.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value = text[start..i].parse::<BigUint>().expect("ascii digits");
            out.push((start, Tok::Int(value)));
        } else if b.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else {
            let ch = text[start..].chars().next().expect("in bounds");
            return Err(ParseError::new(start, alloc::format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let found = self.peek().map_or_else(|| "end of input".into(), Tok::describe);
        ParseError::new(self.offset(), alloc::format!("expected {wanted}, found {found}"))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    left = Expr::Add(Box::new(left), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    left = Expr::Sub(Box::new(left), Box::new(self.term()?));
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                }
                Some(Tok::Ident(_) | Tok::Int(_) | Tok::LParen) => {}
                _ => return Ok(left),
            }
            left = Expr::Mul(Box::new(left), Box::new(self.factor()?));
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(v)) => {
                let e = u32::try_from(&v).map_err(|_| ParseError::new(at, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected("a non-negative integer exponent"))
            }
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.bump();
                Ok(Expr::Int(v))
            }
            Some(Tok::Ident(name)) => {
                self.bump();
                Ok(if name == "n" { Expr::N } else { Expr::Sym(name) })
            }
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.base()?)))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, `n`, a symbol, `(` or `-`")),
        }
    }
}

/// Parses one or more expressions separated by `==`.
pub(super) fn parse_chain(text: &str) -> Result<Vec<Expr>, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len() };
    let mut sides = alloc::vec![p.expr()?];
    while p.peek() == Some(&Tok::EqEq) {
        p.bump();
        sides.push(p.expr()?);
    }
    if p.peek().is_some() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(sides)
}
