//! A small expression language for Schubert conditions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := base ('^' uint)?
//! base   := uint | 'n' | symbol | '(' expr ')' | '-' base
//! symbol := letter (letter | digit | '_')*
//! ```
//!
//! Multiplication may be implicit before a symbol, a number or `(`. An
//! identity is two or more expressions joined by `==`. The exceptional
//! divisor is spelled `eps`; point markers `p1`, `p2`, ... exist only in the
//! multipoint context.

mod parser;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};

use crate::exactalg::{AlgebraError, Coefficient, Polynomial};
use crate::multipoint::{MultipointError, MultipointExpression, LINE_SYMBOLS};
use crate::spaces::SpaceHandle;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigUint),
    /// The formal parameter `n`.
    N,
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        Self { offset, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unknown symbol `{name}` in {context}; valid symbols: {}", valid.join(", "))]
    UnknownSymbol { name: String, context: String, valid: Vec<String> },
    #[error("point marker `{0}` is only meaningful in tangency expressions")]
    MarkerOutsideTangency(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Multipoint(#[from] MultipointError),
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut sides = parser::parse_chain(text)?;
    if sides.len() > 1 {
        let at = text.find("==").unwrap_or(0);
        return Err(ParseError::new(at, "`==` is only allowed in identities"));
    }
    Ok(sides.pop().expect("one side"))
}

/// Parses `lhs == rhs [== ...]` into its sides.
pub fn parse_identity(text: &str) -> Result<Vec<Expr>, ParseError> {
    let sides = parser::parse_chain(text)?;
    if sides.len() < 2 {
        return Err(ParseError::new(text.len(), "expected `==` followed by another expression"));
    }
    Ok(sides)
}

impl Expr {
    fn is_atom(&self) -> bool {
        matches!(self, Expr::Int(_) | Expr::N | Expr::Sym(_))
    }

    fn is_sum(&self) -> bool {
        matches!(self, Expr::Add(..) | Expr::Sub(..))
    }

    /// Every symbol name, in order of first appearance.
    pub fn symbols(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Sym(s) => {
                if !out.contains(&s.as_str()) {
                    out.push(s);
                }
            }
            Expr::Int(_) | Expr::N => {}
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_symbols(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }
}

struct Wrapped<'a>(&'a Expr, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Prints text that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::N => f.write_str("n"),
            Expr::Sym(s) => f.write_str(s),
            Expr::Neg(a) => write!(f, "-{}", Wrapped(a, !a.is_atom() && !matches!(**a, Expr::Neg(_)))),
            Expr::Add(a, b) => write!(f, "{a} + {}", Wrapped(b, b.is_sum())),
            Expr::Sub(a, b) => write!(f, "{a} - {}", Wrapped(b, b.is_sum())),
            Expr::Mul(a, b) => {
                write!(f, "{}*{}", Wrapped(a, a.is_sum()), Wrapped(b, b.is_sum() || matches!(**b, Expr::Mul(..))))
            }
            Expr::Pow(a, e) => write!(f, "{}^{e}", Wrapped(a, !a.is_atom())),
        }
    }
}

/// Values an expression can be evaluated into.
trait Algebra: Sized {
    type Error: From<EvalError>;
    fn constant(&self, c: Coefficient) -> Self::Value;
    fn symbol(&self, name: &str) -> Result<Self::Value, Self::Error>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, Self::Error>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, Self::Error>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, Self::Error>;
    type Value: Clone;

    fn eval(&self, e: &Expr) -> Result<Self::Value, Self::Error> {
        Ok(match e {
            Expr::Int(v) => self.constant(Coefficient::from_bigint(BigInt::from(v.clone()))),
            Expr::N => self.constant(Coefficient::n()),
            Expr::Sym(s) => self.symbol(s)?,
            Expr::Neg(a) => {
                let zero = self.constant(Coefficient::zero());
                self.sub(&zero, &self.eval(a)?)?
            }
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?)?,
            Expr::Sub(a, b) => self.sub(&self.eval(a)?, &self.eval(b)?)?,
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?)?,
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                let mut acc = self.constant(Coefficient::one());
                for _ in 0..*k {
                    acc = self.mul(&acc, &base)?;
                }
                acc
            }
        })
    }
}

fn is_marker(name: &str) -> bool {
    name.strip_prefix('p').is_some_and(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
}

impl Algebra for SpaceHandle {
    type Error = EvalError;
    type Value = Polynomial;

    fn constant(&self, c: Coefficient) -> Polynomial {
        Polynomial::constant(self.universe(), c)
    }

    fn symbol(&self, name: &str) -> Result<Polynomial, EvalError> {
        match crate::spaces::symbol(self, name) {
            Ok(p) => Ok(p),
            Err(_) if is_marker(name) => Err(EvalError::MarkerOutsideTangency(name.into())),
            Err(e) => Err(EvalError::UnknownSymbol { name: e.name, context: e.space.to_string(), valid: e.valid }),
        }
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial, EvalError> {
        Ok(a.try_add(b)?)
    }

    fn sub(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial, EvalError> {
        Ok(a.try_sub(b)?)
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial, EvalError> {
        Ok(self.normal_form(&a.try_mul(b)?)?)
    }
}

/// Evaluates in a space's ring and returns the normal form.
pub fn evaluate(expr: &Expr, space: &SpaceHandle) -> Result<Polynomial, EvalError> {
    Ok(space.normal_form(&space.eval(expr)?)?)
}

struct Multipoint(usize);

impl Algebra for Multipoint {
    type Error = EvalError;
    type Value = MultipointExpression;

    fn constant(&self, c: Coefficient) -> MultipointExpression {
        MultipointExpression::constant(self.0, c)
    }

    fn symbol(&self, name: &str) -> Result<MultipointExpression, EvalError> {
        if let Some(e) = MultipointExpression::line_symbol(self.0, name) {
            return Ok(e);
        }
        let marker = name.strip_prefix('p').filter(|_| is_marker(name)).and_then(|d| d.parse::<usize>().ok());
        if let Some(e) = marker.and_then(|i| MultipointExpression::marker(self.0, i)) {
            return Ok(e);
        }
        let mut valid: Vec<String> = LINE_SYMBOLS.iter().map(|s| s.to_string()).collect();
        valid.extend((1..=self.0).map(|i| alloc::format!("p{i}")));
        Err(EvalError::UnknownSymbol {
            name: name.into(),
            context: alloc::format!("the tangency calculus with {} markers", self.0),
            valid,
        })
    }

    fn add(&self, a: &MultipointExpression, b: &MultipointExpression) -> Result<MultipointExpression, EvalError> {
        Ok(a.try_add(b)?)
    }

    fn sub(&self, a: &MultipointExpression, b: &MultipointExpression) -> Result<MultipointExpression, EvalError> {
        Ok(a.try_sub(b)?)
    }

    fn mul(&self, a: &MultipointExpression, b: &MultipointExpression) -> Result<MultipointExpression, EvalError> {
        Ok(a.try_mul(b)?)
    }
}

/// Evaluates over line symbols and the markers `p1..p{markers}`, without reducing.
pub fn evaluate_multipoint(expr: &Expr, markers: usize) -> Result<MultipointExpression, EvalError> {
    Multipoint(markers).eval(expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{make_space, SpaceId};
    use alloc::format;

    fn sym(s: &str) -> Box<Expr> {
        Box::new(Expr::Sym(s.into()))
    }

    #[test]
    fn parses_the_examples() {
        assert_eq!(parse_expression("g^4").unwrap(), Expr::Pow(sym("g"), 4));
        let e = parse_expression("p*g - (p^2 + g_e)").unwrap();
        let expected = Expr::Sub(
            Box::new(Expr::Mul(sym("p"), sym("g"))),
            Box::new(Expr::Add(Box::new(Expr::Pow(sym("p"), 2)), sym("g_e"))),
        );
        assert_eq!(e, expected);
        let heart = parse_expression("n^2*t^2 - n*t*eps").unwrap();
        assert_eq!(heart.symbols(), ["t", "eps"]);
    }

    #[test]
    fn precedence() {
        let p = |s| parse_expression(s).unwrap();
        assert_eq!(p("a + b*c^2"), p("a + (b*(c^2))"));
        assert_eq!(p("a*b + c"), p("(a*b) + c"));
        assert_eq!(p("a - b - c"), p("(a - b) - c"));
        assert_eq!(p("2 g g_e"), p("2*g*g_e"));
        assert_eq!(p("2(g + 1)"), p("2*(g + 1)"));
        assert_eq!(p("-g^2"), Expr::Pow(Box::new(Expr::Neg(sym("g"))), 2));
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse_expression("g + * h").unwrap_err();
        assert_eq!(e.offset, 4);
        assert_eq!(parse_expression("g^x").unwrap_err().offset, 2);
        assert_eq!(parse_expression("(g").unwrap_err().offset, 2);
        assert_eq!(parse_expression("g $").unwrap_err().offset, 2);
        assert_eq!(parse_expression("g == h").unwrap_err().offset, 2);
        assert_eq!(parse_expression("g = h").unwrap_err().offset, 2);
        assert!(parse_identity("g").is_err());
        assert_eq!(parse_identity("a == b == c").unwrap().len(), 3);
    }

    #[test]
    fn prints_parseable_text() {
        for text in ["-(g^2)", "(-g)^2", "a - (b - c)", "a*(b*c)", "(a + b)*c", "--g", "a*-b", "(g^2)^3", "-(a*b)"] {
            let e = parse_expression(text).unwrap();
            assert_eq!(format!("{e}"), text);
            assert_eq!(parse_expression(&format!("{e}")).unwrap(), e);
        }
    }

    #[test]
    fn evaluates_in_spaces() {
        let gr = make_space(SpaceId::Gr);
        let v = evaluate(&parse_expression("g^2").unwrap(), &gr).unwrap();
        assert_eq!(format!("{v}"), "c1^2");
        let p3 = make_space(SpaceId::P3);
        assert_eq!(format!("{}", evaluate(&parse_expression("p").unwrap(), &p3).unwrap()), "t");
        let err = evaluate(&parse_expression("g_e").unwrap(), &p3).unwrap_err();
        assert!(matches!(err, EvalError::UnknownSymbol { ref name, .. } if name == "g_e"));
        let err = evaluate(&parse_expression("p1").unwrap(), &p3).unwrap_err();
        assert_eq!(err, EvalError::MarkerOutsideTangency("p1".into()));
        let bu = make_space(SpaceId::Blowup);
        let v = evaluate(&parse_expression("eps^3").unwrap(), &bu).unwrap();
        assert_eq!(format!("{v}"), "4*eps^2*t - 6*eps*t^2 + 4*t^3");
    }

    #[test]
    fn evaluates_multipoint() {
        let e = evaluate_multipoint(&parse_expression("(p1 + p2 - g)*g_s").unwrap(), 2).unwrap();
        assert_eq!(format!("{e}"), "g_s*p1 + g_s*p2 - g*g_s");
        assert!(evaluate_multipoint(&parse_expression("p3").unwrap(), 2).is_err());
        assert!(evaluate_multipoint(&parse_expression("t").unwrap(), 2).is_err());
    }
}
