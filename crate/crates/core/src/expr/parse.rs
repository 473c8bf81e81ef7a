//! Lexer and recursive-descent parser for the identity language.
//!
//! ```text
//! expr    := term (('+'|'-') term)*
//! term    := factor (('*'|'/') factor)*
//! factor  := base ('^' exponent)? | '-' factor
//! exponent:= '-'? (integer | ident | '(' expr ')')
//! base    := number | 'pi' | ident | trig | sumprod | 'sqrt' '(' expr ')' | '(' expr ')'
//! trig    := ('sin'|'cos'|'tan'|'cot'|'sec'|'csc') '(' expr ')'
//! sumprod := ('sum'|'prod') '(' ident '=' expr '..' expr ',' expr ')'
//! number  := integer ('/' integer)?
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::ast::{BinOp, Expr, ExprKind, Indexed, Span};
use crate::cyclo::TrigFn;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("zero denominator in numeric literal")]
    ZeroDenominator,
    #[error("exponent must be an integer")]
    NonIntegerExponent,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("index variable `{0}` is already bound")]
    DuplicateBinding(String),
    #[error("`{0}` is reserved")]
    Reserved(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {kind}", .span.start + 1)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: Span,
}

/// Both sides of `lhs = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Identity {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    DotDot,
    Eq,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::DotDot => write!(f, "`..`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

const RESERVED: [&str; 10] = [
    "pi", "sin", "cos", "tan", "cot", "sec", "csc", "sqrt", "sum", "prod",
];

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b'=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(t) = single {
            i += 1;
            out.push((t, Span::new(start, i)));
        } else if c == b'.' && bytes.get(i + 1) == Some(&b'.') {
            i += 2;
            out.push((Tok::DotDot, Span::new(start, i)));
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Int(v), Span::new(start, i)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), Span::new(start, i)));
        } else {
            let ch = src[start..].chars().next().expect("in bounds");
            return Err(ParseError {
                kind: ParseErrorKind::UnexpectedChar(ch),
                span: Span::new(start, start + ch.len_utf8()),
            });
        }
    }
    out.push((Tok::End, Span::new(src.len(), src.len())));
    Ok(out)
}

struct Parser<'p> {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    bound: Vec<String>,
    params: Option<&'p [&'p str]>,
}

impl<'p> Parser<'p> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, off: usize) -> &Tok {
        let i = (self.pos + off).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            kind: ParseErrorKind::Unexpected {
                expected: expected.to_string(),
                found: self.peek().to_string(),
            },
            span: self.span(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Span, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            self.unexpected(what)
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            let start = self.bump().1;
            let inner = self.factor()?;
            let span = start.join(inner.span);
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let exp = self.exponent()?;
        let span = base.span.join(exp.span);
        Ok(Expr {
            kind: ExprKind::Pow(Box::new(base), Box::new(exp)),
            span,
        })
    }

    fn exponent(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            let start = self.bump().1;
            let inner = self.exponent_atom()?;
            let span = start.join(inner.span);
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        self.exponent_atom()
    }

    fn exponent_atom(&mut self) -> Result<Expr, ParseError> {
        let e = match self.peek().clone() {
            Tok::Int(v) => {
                let span = self.bump().1;
                Expr {
                    kind: ExprKind::Num(BigRational::from_integer(v)),
                    span,
                }
            }
            Tok::Ident(name) if !RESERVED.contains(&name.as_str()) => {
                let span = self.bump().1;
                self.variable(name, span)?
            }
            Tok::LParen => {
                let start = self.bump().1;
                let mut inner = self.expr()?;
                let end = self.expect(Tok::RParen, "`)`")?;
                inner.span = start.join(end);
                inner
            }
            _ => return self.unexpected("integer exponent"),
        };
        match constant_value(&e) {
            Some(q) if !q.is_integer() => Err(ParseError {
                kind: ParseErrorKind::NonIntegerExponent,
                span: e.span,
            }),
            _ if contains_pi_or_trig(&e) => Err(ParseError {
                kind: ParseErrorKind::NonIntegerExponent,
                span: e.span,
            }),
            _ => Ok(e),
        }
    }

    fn variable(&self, name: String, span: Span) -> Result<Expr, ParseError> {
        let known =
            self.bound.contains(&name) || self.params.is_none_or(|ps| ps.contains(&name.as_str()));
        if !known {
            return Err(ParseError {
                kind: ParseErrorKind::UnboundVariable(name),
                span,
            });
        }
        Ok(Expr {
            kind: ExprKind::Var(name),
            span,
        })
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(p) => {
                let mut span = self.bump().1;
                let mut q = BigRational::from_integer(p);
                // `p/q` with two integer literals is a single number
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(d) = self.peek_at(1).clone() {
                        self.bump();
                        let dspan = self.bump().1;
                        span = span.join(dspan);
                        if d.is_zero() {
                            return Err(ParseError {
                                kind: ParseErrorKind::ZeroDenominator,
                                span,
                            });
                        }
                        q /= BigRational::from_integer(d);
                    }
                }
                Ok(Expr {
                    kind: ExprKind::Num(q),
                    span,
                })
            }
            Tok::LParen => {
                let start = self.bump().1;
                let mut inner = self.expr()?;
                let end = self.expect(Tok::RParen, "`)`")?;
                inner.span = start.join(end);
                Ok(inner)
            }
            Tok::Ident(name) => {
                let span = self.bump().1;
                match name.as_str() {
                    "pi" => Ok(Expr {
                        kind: ExprKind::Pi,
                        span,
                    }),
                    "sqrt" => {
                        let (arg, end) = self.call_arg()?;
                        Ok(Expr {
                            kind: ExprKind::Sqrt(Box::new(arg)),
                            span: span.join(end),
                        })
                    }
                    "sum" => self.indexed(Indexed::Sum, span),
                    "prod" => self.indexed(Indexed::Prod, span),
                    other => match other.parse::<TrigFn>() {
                        Ok(f) => {
                            let (arg, end) = self.call_arg()?;
                            Ok(Expr {
                                kind: ExprKind::Trig(f, Box::new(arg)),
                                span: span.join(end),
                            })
                        }
                        Err(_) => self.variable(name, span),
                    },
                }
            }
            _ => self.unexpected("an expression"),
        }
    }

    fn call_arg(&mut self) -> Result<(Expr, Span), ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let arg = self.expr()?;
        let end = self.expect(Tok::RParen, "`)`")?;
        Ok((arg, end))
    }

    fn indexed(&mut self, op: Indexed, start: Span) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let (var, vspan) = match self.peek().clone() {
            Tok::Ident(v) => (v, self.bump().1),
            _ => return self.unexpected("index variable"),
        };
        if RESERVED.contains(&var.as_str()) {
            return Err(ParseError {
                kind: ParseErrorKind::Reserved(var),
                span: vspan,
            });
        }
        let shadows_param = self.params.is_some_and(|ps| ps.contains(&var.as_str()));
        if self.bound.contains(&var) || shadows_param {
            return Err(ParseError {
                kind: ParseErrorKind::DuplicateBinding(var),
                span: vspan,
            });
        }
        self.expect(Tok::Eq, "`=`")?;
        let lo = self.expr()?;
        self.expect(Tok::DotDot, "`..`")?;
        let hi = self.expr()?;
        self.expect(Tok::Comma, "`,`")?;
        self.bound.push(var.clone());
        let body = self.expr();
        self.bound.pop();
        let body = body?;
        let end = self.expect(Tok::RParen, "`)`")?;
        Ok(Expr {
            kind: ExprKind::Indexed {
                op,
                var,
                lo: Box::new(lo),
                hi: Box::new(hi),
                body: Box::new(body),
            },
            span: start.join(end),
        })
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.unexpected("end of input")
        }
    }
}

fn binary(op: BinOp, l: Expr, r: Expr) -> Expr {
    let span = l.span.join(r.span);
    Expr {
        kind: ExprKind::Binary(op, Box::new(l), Box::new(r)),
        span,
    }
}

/// Value of a variable-free, trig-free subtree, if it has one.
pub(crate) fn constant_value(e: &Expr) -> Option<BigRational> {
    match &e.kind {
        ExprKind::Num(q) => Some(q.clone()),
        ExprKind::Neg(a) => constant_value(a).map(|q| -q),
        ExprKind::Binary(op, l, r) => {
            let (a, b) = (constant_value(l)?, constant_value(r)?);
            match op {
                BinOp::Add => Some(a + b),
                BinOp::Sub => Some(a - b),
                BinOp::Mul => Some(a * b),
                BinOp::Div if b.is_zero() => None,
                BinOp::Div => Some(a / b),
            }
        }
        ExprKind::Pow(b, x) => {
            let (b, x) = (constant_value(b)?, constant_value(x)?);
            let x: i32 = x.to_integer().try_into().ok()?;
            if b.is_zero() && x < 0 || x.abs() > 4096 {
                return None;
            }
            Some(num_traits::pow::Pow::pow(&b, x))
        }
        _ => None,
    }
}

fn contains_pi_or_trig(e: &Expr) -> bool {
    match &e.kind {
        ExprKind::Pi | ExprKind::Trig(..) | ExprKind::Sqrt(_) => true,
        ExprKind::Num(_) | ExprKind::Var(_) => false,
        ExprKind::Neg(a) => contains_pi_or_trig(a),
        ExprKind::Binary(_, l, r) | ExprKind::Pow(l, r) => {
            contains_pi_or_trig(l) || contains_pi_or_trig(r)
        }
        ExprKind::Indexed { lo, hi, body, .. } => {
            contains_pi_or_trig(lo) || contains_pi_or_trig(hi) || contains_pi_or_trig(body)
        }
    }
}

fn run<T>(
    src: &str,
    params: Option<&[&str]>,
    f: impl FnOnce(&mut Parser<'_>) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        bound: Vec::new(),
        params,
    };
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

/// Parses an expression; free names are treated as parameters.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    run(src, None, |p| p.expr())
}

/// Parses an expression whose free names must all appear in `params`.
pub fn parse_with_params(src: &str, params: &[&str]) -> Result<Expr, ParseError> {
    run(src, Some(params), |p| p.expr())
}

/// Parses `lhs = rhs`; a bare expression is read as `expr = 0`.
pub fn parse_identity(src: &str) -> Result<Identity, ParseError> {
    run(src, None, |p| {
        let lhs = p.expr()?;
        let rhs = if *p.peek() == Tok::Eq {
            p.bump();
            p.expr()?
        } else {
            let at = p.span();
            Expr {
                kind: ExprKind::Num(BigRational::zero()),
                span: at,
            }
        };
        Ok(Identity { lhs, rhs })
    })
}

impl std::str::FromStr for Expr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
