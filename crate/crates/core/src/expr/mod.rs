//! The identity language: parsing, exact and interval evaluation, verification.

mod ast;
mod eval;
mod interval;
mod parse;
mod verify;

pub use ast::{BinOp, Expr, ExprKind, Indexed, Span};
pub use eval::{
    conductor_for, eval_exact, eval_exact_in, eval_exact_scaled, eval_interval, EvalError,
    ParamBinding, MAX_CONDUCTOR, MAX_RANGE,
};
pub use interval::{IntervalError, IntervalReal};
pub use parse::{parse, parse_identity, parse_with_params, Identity, ParseError, ParseErrorKind};
pub use verify::{approx_real, verify, Mode, Verdict, VerifyOptions, VerifyReport, Witness};
