//! Polynomial expressions as typed on the command line.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' INT)*          right-associative, literal exponents only
//! atom  := INT | INT '/' INT | VAR | '(' expr ')'
//! VAR   := ('u' | 'y' | 'a' | 'c') DIGITS
//! ```
//!
//! Multiplication must be written out. A rational literal is a single token,
//! so `2/3` has no spaces. Variables in one expression share a prefix.

mod parser;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{MultiPoly, Ring, VarPrefix};
use crate::error::{Error, Result};

pub use parser::{parse_expr, ParseError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    Rational(BigRational),
    /// A variable with a 1-based index.
    Var(VarPrefix, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// The common variable prefix, or `None` for a constant expression.
    pub fn prefix(&self) -> Option<VarPrefix> {
        match self {
            Expr::Int(_) | Expr::Rational(_) => None,
            Expr::Var(p, _) => Some(*p),
            Expr::Neg(e) | Expr::Pow(e, _) => e.prefix(),
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) => l.prefix().or_else(|| r.prefix()),
        }
    }

    /// Largest variable index, 0 for a constant expression.
    pub fn max_index(&self) -> usize {
        match self {
            Expr::Int(_) | Expr::Rational(_) => 0,
            Expr::Var(_, i) => *i,
            Expr::Neg(e) | Expr::Pow(e, _) => e.max_index(),
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) => l.max_index().max(r.max_index()),
        }
    }
}

/// Fully parenthesized rendering that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Expr::Var(p, i) => write!(f, "{p}{i}"),
            Expr::Add(l, r) => write!(f, "({l} + {r})"),
            Expr::Sub(l, r) => write!(f, "({l} - {r})"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Mul(l, r) => write!(f, "({l} * {r})"),
            Expr::Pow(e, k) => write!(f, "({e})^{k}"),
        }
    }
}

/// Expands `e` into a polynomial of `ring`. Variables must carry the ring's
/// prefix and an index no larger than its variable count.
pub fn lower_to_poly(e: &Expr, ring: Ring) -> Result<MultiPoly> {
    Ok(match e {
        Expr::Int(n) => MultiPoly::constant(ring, BigRational::from_integer(n.clone())),
        Expr::Rational(q) => MultiPoly::constant(ring, q.clone()),
        Expr::Var(p, i) => {
            if *p != ring.prefix() {
                return Err(Error::IncompatibleRings {
                    left: format!("variable {p}{i}"),
                    right: ring.to_string(),
                });
            }
            MultiPoly::variable(ring, *i)?
        }
        Expr::Add(l, r) => &lower_to_poly(l, ring)? + &lower_to_poly(r, ring)?,
        Expr::Sub(l, r) => &lower_to_poly(l, ring)? - &lower_to_poly(r, ring)?,
        Expr::Neg(x) => -&lower_to_poly(x, ring)?,
        Expr::Mul(l, r) => &lower_to_poly(l, ring)? * &lower_to_poly(r, ring)?,
        Expr::Pow(x, k) => lower_to_poly(x, ring)?.pow(*k),
    })
}

/// Parses and lowers in one step.
pub fn parse_poly(src: &str, ring: Ring) -> Result<MultiPoly> {
    lower_to_poly(&parse_expr(src)?, ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize, p: VarPrefix) -> Ring {
        Ring::new(n, p)
    }

    #[test]
    fn lowering_examples() {
        let r = ring(2, VarPrefix::U);
        assert!(parse_poly("u1 - u1", r).unwrap().is_zero());
        assert_eq!(parse_poly("(u1+u2)^2", r).unwrap().to_string(), "u1^2 + 2*u1*u2 + u2^2");
        assert_eq!(parse_poly("2/3*u1", r).unwrap().to_string(), "2/3*u1");
        assert_eq!(parse_poly("-u1^2", r).unwrap().to_string(), "-u1^2");
        assert_eq!(parse_poly("7", r).unwrap().to_string(), "7");
    }

    #[test]
    fn lowering_errors() {
        let r = ring(2, VarPrefix::U);
        assert_eq!(parse_poly("u3", r), Err(Error::IndexOutOfRange { index: 3, vars: 2 }));
        assert!(matches!(parse_poly("y1", r), Err(Error::IncompatibleRings { .. })));
    }

    #[test]
    fn display_round_trips() {
        for src in ["y1^2*y2 - 3*y3", "-(a1 - 2/5)^3*a2", "c1^2*c2", "-(-u1)", "u1^2^2"] {
            let e = parse_expr(src).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{src}");
        }
    }

    #[test]
    fn prefix_and_index() {
        let e = parse_expr("3 + a2*a7").unwrap();
        assert_eq!(e.prefix(), Some(VarPrefix::A));
        assert_eq!(e.max_index(), 7);
        assert_eq!(parse_expr("1/2").unwrap().prefix(), None);
    }
}
