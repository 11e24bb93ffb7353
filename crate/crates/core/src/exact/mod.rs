//! Exact arithmetic: integers, rationals and cyclotomic numbers.

pub mod cyclotomic;
pub mod int;
pub mod parse;
pub mod rational;

use std::str::FromStr;

pub use cyclotomic::Cyclotomic;
pub use int::Int;
pub use parse::{parse_expr, Expr};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    ZeroDivision,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Evaluates a variable-free expression to a cyclotomic number.
pub fn eval_cyclotomic(e: &Expr) -> Result<Cyclotomic, ExactError> {
    Ok(match e {
        Expr::Int(v) => Cyclotomic::from_rational(&Rational::from_int(v.clone())),
        Expr::Root(n) => Cyclotomic::root_of_unity(*n, 1),
        Expr::Var(i) => {
            return Err(ExactError::Parse(format!("variable x{i} in a numeric literal")))
        }
        Expr::Add(a, b) => eval_cyclotomic(a)? + eval_cyclotomic(b)?,
        Expr::Sub(a, b) => eval_cyclotomic(a)? - eval_cyclotomic(b)?,
        Expr::Mul(a, b) => eval_cyclotomic(a)? * eval_cyclotomic(b)?,
        Expr::Div(a, b) => eval_cyclotomic(a)? * eval_cyclotomic(b)?.inv()?,
        Expr::Neg(a) => -eval_cyclotomic(a)?,
        Expr::Pow(a, k) => eval_cyclotomic(a)?.pow(*k),
    })
}

impl FromStr for Cyclotomic {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        eval_cyclotomic(&parse_expr(s)?)
    }
}
