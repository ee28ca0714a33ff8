use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::Expr;
use crate::algebra::VarPrefix;

/// Parenthesis and unary-minus nesting limit; keeps recursion off the stack edge.
const MAX_DEPTH: usize = 256;

/// Height limit of the syntax tree. Left-nested sums grow one level per term,
/// and dropping or lowering the tree recurses over its height.
const MAX_HEIGHT: usize = 4096;

/// A syntax error at a byte offset of the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

const OPERAND: &[&str] = &["integer", "rational p/q", "variable", "'('"];

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Int(BigInt),
    Rat(BigRational),
    Var(VarPrefix, usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Rat(q) => format!("rational {q}"),
            Tok::Var(p, i) => format!("variable {p}{i}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn err(position: usize, expected: &[&'static str], message: impl Into<String>) -> ParseError {
    ParseError { position, expected: expected.to_vec(), message: message.into() }
}

fn digit_run(bytes: &[u8], start: usize) -> usize {
    let mut end = start;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    end
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let end = digit_run(bytes, i);
                let numer: BigInt = src[i..end].parse().expect("ascii digits");
                i = end;
                if i < bytes.len() && bytes[i] == b'/' {
                    let dstart = i + 1;
                    let dend = digit_run(bytes, dstart);
                    if dend == dstart {
                        return Err(err(dstart, &["integer"], "rational literal needs a denominator"));
                    }
                    let denom: BigInt = src[dstart..dend].parse().expect("ascii digits");
                    if denom.is_zero() {
                        return Err(err(dstart, &[], "zero denominator"));
                    }
                    i = dend;
                    out.push((Tok::Rat(BigRational::new(numer, denom)), start));
                } else {
                    out.push((Tok::Int(numer), start));
                }
                continue;
            }
            _ if b.is_ascii_alphabetic() => {
                let prefix = VarPrefix::from_input_char(b as char).ok_or_else(|| {
                    err(start, &["u", "y", "a", "c"], format!("unknown variable prefix '{}'", b as char))
                })?;
                let end = digit_run(bytes, i + 1);
                if end == i + 1 {
                    return Err(err(end, &["variable index"], format!("'{prefix}' needs an index")));
                }
                let index = src[i + 1..end]
                    .parse::<BigInt>()
                    .expect("ascii digits")
                    .to_usize()
                    .filter(|&k| k < u32::MAX as usize)
                    .ok_or_else(|| err(i + 1, &[], "variable index is too large"))?;
                if index == 0 {
                    return Err(err(i + 1, &[], "variable indices start at 1"));
                }
                i = end;
                out.push((Tok::Var(prefix, index), start));
                continue;
            }
            _ => {
                let c = src[i..].chars().next().expect("inside the string");
                return Err(err(start, OPERAND, format!("unexpected character {c:?}")));
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// A subtree with its height.
type Node = (Expr, usize);

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    depth: usize,
    prefix: Option<VarPrefix>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(err(self.offset(), &[], format!("nesting deeper than {MAX_DEPTH}")));
        }
        Ok(())
    }

    fn join(
        &self,
        at: usize,
        l: Node,
        r: Node,
        f: fn(Box<Expr>, Box<Expr>) -> Expr,
    ) -> Result<Node, ParseError> {
        let height = l.1.max(r.1) + 1;
        if height > MAX_HEIGHT {
            return Err(err(at, &[], format!("expression is nested deeper than {MAX_HEIGHT}")));
        }
        Ok((f(Box::new(l.0), Box::new(r.0)), height))
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let at = self.offset();
            let op: fn(Box<Expr>, Box<Expr>) -> Expr = match self.peek() {
                Tok::Plus => Expr::Add,
                Tok::Minus => Expr::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = self.join(at, lhs, rhs, op)?;
        }
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            let at = self.offset();
            self.bump();
            let rhs = self.unary()?;
            lhs = self.join(at, lhs, rhs, Expr::Mul)?;
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            self.enter()?;
            let (inner, h) = self.unary()?;
            self.depth -= 1;
            return Ok((Expr::Neg(Box::new(inner)), h + 1));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ParseError> {
        let (base, height) = self.atom()?;
        let mut exps: Vec<(u32, usize)> = Vec::new();
        while *self.peek() == Tok::Caret {
            self.bump();
            let (tok, at) = self.bump();
            let k = match tok {
                Tok::Int(n) => {
                    n.to_u32().ok_or_else(|| err(at, &[], format!("exponent {n} is too large")))?
                }
                Tok::Minus => return Err(err(at, &["integer"], "exponents cannot be negative")),
                other => {
                    return Err(err(
                        at,
                        &["integer"],
                        format!("exponent must be an integer literal, found {}", other.describe()),
                    ))
                }
            };
            exps.push((k, at));
        }
        // a^b^c = a^(b^c)
        let Some(&(mut e, _)) = exps.last() else {
            return Ok((base, height));
        };
        for &(k, at) in exps.iter().rev().skip(1) {
            e = k.checked_pow(e).ok_or_else(|| err(at, &[], "exponent is too large"))?;
        }
        Ok((Expr::Pow(Box::new(base), e), height + 1))
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Int(n) => Ok((Expr::Int(n), 1)),
            Tok::Rat(q) => Ok((Expr::Rational(q), 1)),
            Tok::Var(p, i) => {
                match self.prefix {
                    Some(q) if q != p => {
                        return Err(err(at, &[], format!("mixed variable prefixes: '{q}' and '{p}'")))
                    }
                    _ => self.prefix = Some(p),
                }
                Ok((Expr::Var(p, i), 1))
            }
            Tok::LParen => {
                self.enter()?;
                let inner = self.expr()?;
                self.depth -= 1;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (other, at) => Err(err(
                        at,
                        &["')'", "'+'", "'-'", "'*'", "'^'"],
                        format!("unclosed '(', found {}", other.describe()),
                    )),
                }
            }
            other => Err(err(at, OPERAND, format!("expected an operand, found {}", other.describe()))),
        }
    }
}

/// Parses a polynomial expression. Never panics; every failure carries the
/// byte offset where parsing stopped.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, depth: 0, prefix: None };
    let (e, _) = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        other => Err(err(
            p.offset(),
            &["'+'", "'-'", "'*'", "'^'", "end of input"],
            format!("unexpected {}", other.describe()),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(p: VarPrefix, i: usize) -> Box<Expr> {
        Box::new(Expr::Var(p, i))
    }

    fn int(n: i64) -> Box<Expr> {
        Box::new(Expr::Int(n.into()))
    }

    #[test]
    fn precedence() {
        use VarPrefix::Y;
        let e = parse_expr("y1^2*y2 - 3*y3").unwrap();
        let want = Expr::Sub(
            Box::new(Expr::Mul(Box::new(Expr::Pow(var(Y, 1), 2)), var(Y, 2))),
            Box::new(Expr::Mul(int(3), var(Y, 3))),
        );
        assert_eq!(e, want);
    }

    #[test]
    fn chern_monomial_and_parenthesized_power() {
        use VarPrefix::{A, C};
        assert_eq!(parse_expr("c1^2*c2").unwrap(), Expr::Mul(Box::new(Expr::Pow(var(C, 1), 2)), var(C, 2)));
        assert_eq!(
            parse_expr("a1*(a1 - a2)^3").unwrap(),
            Expr::Mul(var(A, 1), Box::new(Expr::Pow(Box::new(Expr::Sub(var(A, 1), var(A, 2))), 3)))
        );
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        use VarPrefix::U;
        assert_eq!(parse_expr("-u1^2").unwrap(), Expr::Neg(Box::new(Expr::Pow(var(U, 1), 2))));
        assert_eq!(parse_expr("-u1*u2").unwrap(), Expr::Mul(Box::new(Expr::Neg(var(U, 1))), var(U, 2)));
    }

    #[test]
    fn power_is_right_associative() {
        assert_eq!(parse_expr("u1^2^3").unwrap(), Expr::Pow(var(VarPrefix::U, 1), 8));
        assert_eq!(parse_expr("u1^3^2").unwrap(), Expr::Pow(var(VarPrefix::U, 1), 9));
    }

    #[test]
    fn literals() {
        assert_eq!(parse_expr("2/4").unwrap(), Expr::Rational(BigRational::new(1.into(), 2.into())));
        assert_eq!(parse_expr(" u12 ").unwrap(), Expr::Var(VarPrefix::U, 12));
        assert_eq!(
            parse_expr("123456789012345678901234567890").unwrap(),
            Expr::Int("123456789012345678901234567890".parse().unwrap())
        );
    }

    fn fails_at(src: &str) -> (usize, String) {
        let e = parse_expr(src).unwrap_err();
        (e.position, e.message)
    }

    #[test]
    fn error_positions() {
        let (pos, msg) = fails_at("y1^y2");
        assert_eq!(pos, 3);
        assert!(msg.contains("integer literal"), "{msg}");
        assert_eq!(fails_at("y1^-2").0, 3);
        assert!(fails_at("y1^-2").1.contains("negative"));
        assert_eq!(fails_at("y1 + a2").0, 5);
        assert!(fails_at("y1 + a2").1.contains("mixed"));
        assert_eq!(fails_at("u0").0, 1);
        assert_eq!(fails_at("1/0").0, 2);
        assert_eq!(fails_at("(u1 + u2").0, 8);
        assert_eq!(fails_at("u1 u2").0, 3);
        assert_eq!(fails_at("u1 +").0, 4);
        assert_eq!(fails_at("x1").0, 0);
        assert_eq!(fails_at("u").0, 1);
        assert_eq!(fails_at("u1 / 2").0, 3);
        assert_eq!(fails_at("").0, 0);
        assert_eq!(fails_at("u1^99999999999").0, 3);
        assert_eq!(fails_at("é").0, 0);
    }

    #[test]
    fn expected_sets() {
        let e = parse_expr("u1 +").unwrap_err();
        assert!(e.expected.contains(&"variable"));
        let e = parse_expr("u1 u2").unwrap_err();
        assert!(e.expected.contains(&"end of input"));
    }

    #[test]
    fn deep_nesting_is_an_error() {
        let src = "(".repeat(10_000) + "u1" + &")".repeat(10_000);
        assert!(parse_expr(&src).is_err());
        let src = "-".repeat(10_000) + "u1";
        assert!(parse_expr(&src).is_err());
        let src = "(".repeat(100) + "u1" + &")".repeat(100);
        assert!(parse_expr(&src).is_ok());
    }

    #[test]
    fn long_sums_are_bounded() {
        let ok = vec!["u1"; 1000].join(" + ");
        assert!(parse_expr(&ok).is_ok());
        let too_long = vec!["u1"; 100_000].join(" + ");
        assert!(parse_expr(&too_long).is_err());
    }

    #[test]
    fn huge_exponent_chain() {
        assert!(parse_expr("u1^2^2^2^2^2^2").is_err());
    }
}
