use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use crate::cyclo::TrigFn;

/// Byte range in the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Indexed {
    Sum,
    Prod,
}

impl Indexed {
    pub fn keyword(self) -> &'static str {
        match self {
            Indexed::Sum => "sum",
            Indexed::Prod => "prod",
        }
    }
}

/// A node of the identity language. Equality ignores spans.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    /// Nonnegative literal from the parser; builders may use any sign.
    Num(BigRational),
    Pi,
    /// A parameter or a bound index variable.
    Var(String),
    Trig(TrigFn, Box<Expr>),
    /// Only evaluable in numeric mode.
    Sqrt(Box<Expr>),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    /// Integer power; the exponent must evaluate to an integer.
    Pow(Box<Expr>, Box<Expr>),
    Indexed {
        op: Indexed,
        var: String,
        lo: Box<Expr>,
        hi: Box<Expr>,
        body: Box<Expr>,
    },
}

impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        ExprKind::Neg(Box::new(self)).into()
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl From<ExprKind> for Expr {
    fn from(kind: ExprKind) -> Self {
        Expr {
            kind,
            span: Span::default(),
        }
    }
}

// Builders, mostly for programmatic construction and tests.
impl Expr {
    pub fn num(q: BigRational) -> Self {
        ExprKind::Num(q).into()
    }

    pub fn int(v: i64) -> Self {
        Self::num(BigRational::from_integer(v.into()))
    }

    pub fn pi() -> Self {
        ExprKind::Pi.into()
    }

    pub fn var(name: &str) -> Self {
        ExprKind::Var(name.to_string()).into()
    }

    pub fn trig(f: TrigFn, arg: Expr) -> Self {
        ExprKind::Trig(f, Box::new(arg)).into()
    }

    pub fn sqrt(arg: Expr) -> Self {
        ExprKind::Sqrt(Box::new(arg)).into()
    }

    pub fn binary(op: BinOp, l: Expr, r: Expr) -> Self {
        ExprKind::Binary(op, Box::new(l), Box::new(r)).into()
    }

    pub fn pow(base: Expr, exp: Expr) -> Self {
        ExprKind::Pow(Box::new(base), Box::new(exp)).into()
    }

    pub fn indexed(op: Indexed, var: &str, lo: Expr, hi: Expr, body: Expr) -> Self {
        ExprKind::Indexed {
            op,
            var: var.to_string(),
            lo: Box::new(lo),
            hi: Box::new(hi),
            body: Box::new(body),
        }
        .into()
    }

    /// Names referenced but not bound by an enclosing sum or product.
    pub fn free_params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match &self.kind {
            ExprKind::Num(_) | ExprKind::Pi => {}
            ExprKind::Var(v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            ExprKind::Trig(_, a) | ExprKind::Sqrt(a) | ExprKind::Neg(a) => {
                a.collect_free(bound, out)
            }
            ExprKind::Binary(_, l, r) | ExprKind::Pow(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            ExprKind::Indexed {
                var, lo, hi, body, ..
            } => {
                lo.collect_free(bound, out);
                hi.collect_free(bound, out);
                bound.push(var.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn contains_sqrt(&self) -> bool {
        match &self.kind {
            ExprKind::Sqrt(_) => true,
            ExprKind::Num(_) | ExprKind::Pi | ExprKind::Var(_) => false,
            ExprKind::Trig(_, a) | ExprKind::Neg(a) => a.contains_sqrt(),
            ExprKind::Binary(_, l, r) | ExprKind::Pow(l, r) => {
                l.contains_sqrt() || r.contains_sqrt()
            }
            ExprKind::Indexed { lo, hi, body, .. } => {
                lo.contains_sqrt() || hi.contains_sqrt() || body.contains_sqrt()
            }
        }
    }

    // Precedence levels: 1 additive, 2 multiplicative, 3 prefix minus,
    // 4 power, 5 atoms.
    fn prec(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(op, ..) => op.prec(),
            ExprKind::Neg(_) => 3,
            ExprKind::Pow(..) => 4,
            ExprKind::Num(q) if q.is_negative() => 3,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        if let ExprKind::Num(q) = &self.kind {
            return write_num(f, q, ctx);
        }
        if self.prec() < ctx {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match &self.kind {
            ExprKind::Num(_) => unreachable!(),
            ExprKind::Pi => write!(f, "pi"),
            ExprKind::Var(v) => write!(f, "{v}"),
            ExprKind::Trig(t, a) => {
                write!(f, "{t}(")?;
                a.write_at(f, 0)?;
                write!(f, ")")
            }
            ExprKind::Sqrt(a) => {
                write!(f, "sqrt(")?;
                a.write_at(f, 0)?;
                write!(f, ")")
            }
            ExprKind::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, 3)
            }
            ExprKind::Binary(BinOp::Div, l, r) => {
                let ls = Printed(l, 2).to_string();
                let rs = Printed(r, 3).to_string();
                // `2/3` would lex as one literal
                if ends_with_base_int(&ls) && rs.starts_with(|c: char| c.is_ascii_digit()) {
                    write!(f, "{ls}/({rs})")
                } else {
                    write!(f, "{ls}/{rs}")
                }
            }
            ExprKind::Binary(op, l, r) => {
                let p = op.prec();
                l.write_at(f, p)?;
                if p == 1 {
                    write!(f, " {} ", op.symbol())?;
                } else {
                    write!(f, "{}", op.symbol())?;
                }
                r.write_at(f, p + 1)
            }
            ExprKind::Pow(b, e) => {
                b.write_at(f, 5)?;
                write!(f, "^")?;
                write_exponent(f, e)
            }
            ExprKind::Indexed {
                op,
                var,
                lo,
                hi,
                body,
            } => {
                write!(f, "{}({var}=", op.keyword())?;
                lo.write_at(f, 0)?;
                write!(f, "..")?;
                hi.write_at(f, 0)?;
                write!(f, ", ")?;
                body.write_at(f, 0)?;
                write!(f, ")")
            }
        }
    }
}

struct Printed<'a>(&'a Expr, u8);

impl fmt::Display for Printed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_at(f, self.1)
    }
}

/// True if `s` ends in an integer literal that the parser reads as a base
/// (not an exponent, not part of a name).
fn ends_with_base_int(s: &str) -> bool {
    let head = s.trim_end_matches(|c: char| c.is_ascii_digit());
    if head.len() == s.len() {
        return false;
    }
    let head = head.strip_suffix('-').unwrap_or(head);
    !head.ends_with(|c: char| c == '^' || c == '_' || c.is_ascii_alphanumeric())
}

fn write_num(f: &mut fmt::Formatter<'_>, q: &BigRational, ctx: u8) -> fmt::Result {
    let bare = if q.is_negative() {
        false
    } else if q.is_integer() {
        true
    } else {
        // `p/q` is a single literal, safe wherever a multiplicative operand may start
        ctx <= 2
    };
    if bare {
        write!(f, "{q}")
    } else if q.is_negative() && ctx <= 3 {
        write!(f, "-")?;
        write_num(f, &-q, 3)
    } else {
        write!(f, "({q})")
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, e: &Expr) -> fmt::Result {
    match &e.kind {
        ExprKind::Num(q) if q.is_integer() && !q.is_negative() => write!(f, "{q}"),
        ExprKind::Var(v) => write!(f, "{v}"),
        ExprKind::Neg(inner)
            if matches!(&inner.kind, ExprKind::Num(q) if q.is_integer() && !q.is_negative())
                || matches!(&inner.kind, ExprKind::Var(_)) =>
        {
            write!(f, "-")?;
            write_exponent(f, inner)
        }
        _ => {
            write!(f, "(")?;
            e.write_at(f, 0)?;
            write!(f, ")")
        }
    }
}

/// Canonical text form; `parse` of this text yields an equal tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
