//! Text front end: expressions over Q(i) in named variables.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' nat)?
//! base   := int | 'i' | variable | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Rational constants are written as quotients of
//! integers, e.g. `3/5 + 4/5*i`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::arith::GaussianRational;
use crate::poly::{BiPoly, UniPoly};
use crate::ratfun::RatFun;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

const CONSTANT_NAMES: &[&str] = &[
    "e", "pi", "tau", "phi", "sqrt", "exp", "log", "ln", "sin", "cos", "tan", "inf", "nan",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("coefficient `{text}` at offset {offset} is not a Gaussian rational")]
    NonGaussianCoefficient { offset: usize, text: String },
    #[error("unexpected variable `{found}` at offset {offset}; expected one of {expected:?}")]
    WrongVariable {
        offset: usize,
        found: char,
        expected: Vec<char>,
    },
    #[error("division by zero at offset {offset}")]
    DivisionByZero { offset: usize },
    #[error("expression is not a polynomial")]
    NotPolynomial,
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            Self::Syntax { offset, .. }
            | Self::NonGaussianCoefficient { offset, .. }
            | Self::WrongVariable { offset, .. }
            | Self::DivisionByZero { offset } => Some(*offset),
            Self::NotPolynomial => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Syntax tree of a parsed expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(GaussianRational),
    Var(char),
    Neg(Box<Expr>),
    /// Binary operation; `offset` locates the operator in the source.
    Bin {
        op: BinOp,
        offset: usize,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k] as char;
        let start = k;
        if c.is_ascii_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() || c == '.' {
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            let decimal = k < bytes.len()
                && (bytes[k] == b'.'
                    || ((bytes[k] == b'e' || bytes[k] == b'E')
                        && bytes.get(k + 1).is_some_and(|b| b.is_ascii_digit() || *b == b'-' || *b == b'+')));
            if decimal {
                k += 1;
                while k < bytes.len()
                    && (bytes[k].is_ascii_alphanumeric() || matches!(bytes[k], b'.' | b'-' | b'+'))
                {
                    if matches!(bytes[k], b'-' | b'+') && !matches!(bytes[k - 1], b'e' | b'E') {
                        break;
                    }
                    k += 1;
                }
                return Err(ParseError::NonGaussianCoefficient {
                    offset: start,
                    text: text[start..k].to_string(),
                });
            }
            let n: BigInt = text[start..k].parse().expect("digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                k += 1;
            }
            out.push((Tok::Ident(text[start..k].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), start));
            k += 1;
        } else {
            let ch = text[start..].chars().next().unwrap();
            return Err(ParseError::Syntax {
                offset: start,
                message: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a [char],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: &str) -> Result<T, ParseError> {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Sym(c)) => format!("`{c}`"),
        };
        Err(ParseError::Syntax {
            offset: self.offset(),
            message: format!("{message}, found {found}"),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let negate = self.eat('-');
        let mut lhs = self.term()?;
        if negate {
            lhs = Expr::Neg(Box::new(lhs));
        }
        loop {
            let offset = self.offset();
            let op = if self.eat('+') {
                BinOp::Add
            } else if self.eat('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Bin {
                op,
                offset,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let offset = self.offset();
            let op = if self.eat('*') {
                BinOp::Mul
            } else if self.eat('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.factor()?;
            lhs = Expr::Bin {
                op,
                offset,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                match u32::try_from(&n) {
                    Ok(e) if e <= MAX_EXPONENT => Ok(Expr::Pow(Box::new(base), e)),
                    _ => Err(ParseError::Syntax {
                        offset,
                        message: format!("exponent {n} exceeds {MAX_EXPONENT}"),
                    }),
                }
            }
            _ => self.error("expected a non-negative integer exponent"),
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Const(BigRational::from_integer(n).into()))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.identifier(&name, offset)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected `)`");
                }
                Ok(e)
            }
            _ => self.error("expected a number, `i`, a variable or `(`"),
        }
    }

    fn identifier(&self, name: &str, offset: usize) -> Result<Expr, ParseError> {
        let mut chars = name.chars();
        let first = chars.next().unwrap();
        let single = chars.next().is_none();
        if name == "i" {
            return Ok(Expr::Const(GaussianRational::i()));
        }
        if single && self.vars.contains(&first) {
            return Ok(Expr::Var(first));
        }
        if CONSTANT_NAMES.contains(&name.to_ascii_lowercase().as_str()) {
            return Err(ParseError::NonGaussianCoefficient {
                offset,
                text: name.to_string(),
            });
        }
        if single {
            return Err(ParseError::WrongVariable {
                offset,
                found: first,
                expected: self.vars.to_vec(),
            });
        }
        Err(ParseError::Syntax {
            offset,
            message: format!("unknown identifier `{name}`"),
        })
    }
}

/// Parses `text` into a syntax tree whose variables are drawn from `vars`.
pub fn parse_expression(text: &str, vars: &[char]) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        vars,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return p.error("expected an operator or end of input");
    }
    Ok(e)
}

impl Expr {
    /// Exact lowering to a rational function in `var`.
    pub fn to_ratfun(&self) -> Result<RatFun, ParseError> {
        Ok(match self {
            Expr::Const(c) => RatFun::constant(c.clone()),
            Expr::Var(_) => RatFun::identity(),
            Expr::Neg(e) => e.to_ratfun()?.neg(),
            Expr::Pow(e, k) => e.to_ratfun()?.pow(*k as usize),
            Expr::Bin {
                op,
                offset,
                lhs,
                rhs,
            } => {
                let (a, b) = (lhs.to_ratfun()?, rhs.to_ratfun()?);
                match op {
                    BinOp::Add => a.add(&b),
                    BinOp::Sub => a.sub(&b),
                    BinOp::Mul => a.mul(&b),
                    BinOp::Div => a
                        .div(&b)
                        .map_err(|_| ParseError::DivisionByZero { offset: *offset })?,
                }
            }
        })
    }

    /// Exact lowering to a polynomial in two variables; division is only
    /// allowed by non-zero constants.
    pub fn to_bipoly(&self, vars: [char; 2]) -> Result<BiPoly, ParseError> {
        Ok(match self {
            Expr::Const(c) => BiPoly::constant(vars, c.clone()),
            Expr::Var(v) => BiPoly::var(vars, usize::from(*v == vars[1])),
            Expr::Neg(e) => -&e.to_bipoly(vars)?,
            Expr::Pow(e, k) => e.to_bipoly(vars)?.pow(*k as usize),
            Expr::Bin {
                op,
                offset,
                lhs,
                rhs,
            } => {
                let (a, b) = (lhs.to_bipoly(vars)?, rhs.to_bipoly(vars)?);
                match op {
                    BinOp::Add => &a + &b,
                    BinOp::Sub => &a - &b,
                    BinOp::Mul => &a * &b,
                    BinOp::Div => {
                        if !b.is_constant() {
                            return Err(ParseError::NotPolynomial);
                        }
                        let c = b.coeff(0, 0);
                        let inv = c
                            .inv()
                            .map_err(|_| ParseError::DivisionByZero { offset: *offset })?;
                        a.scale(&inv)
                    }
                }
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "({c})"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Pow(e, k) => write!(f, "({e})^{k}"),
            Expr::Bin { op, lhs, rhs, .. } => {
                let s = match op {
                    BinOp::Add => '+',
                    BinOp::Sub => '-',
                    BinOp::Mul => '*',
                    BinOp::Div => '/',
                };
                write!(f, "({lhs}{s}{rhs})")
            }
        }
    }
}

pub fn parse_ratfun(text: &str, var: char) -> Result<RatFun, ParseError> {
    parse_expression(text, &[var])?.to_ratfun()
}

pub fn parse_poly(text: &str, var: char) -> Result<UniPoly, ParseError> {
    let r = parse_ratfun(text, var)?;
    if !r.is_polynomial() {
        return Err(ParseError::NotPolynomial);
    }
    Ok(r.num().scale(&r.den().coeff(0).inv().unwrap()))
}

pub fn parse_bipoly(text: &str, vars: [char; 2]) -> Result<BiPoly, ParseError> {
    parse_expression(text, &vars)?.to_bipoly(vars)
}

pub fn parse_constant(text: &str) -> Result<GaussianRational, ParseError> {
    let r = parse_expression(text, &[])?.to_ratfun()?;
    Ok(r.constant_value().expect("expression without variables"))
}
