//! Expression language shared by coefficient parsing, the multivector text
//! format and the `eval` command.
//!
//! Precedence from tightest to loosest: unary `~` and `-`, `_|`, `^`,
//! `*` and `/`, `+` and `-`. All binary operators are left-associative.
//! In scalar mode `^` is exponentiation; in multivector mode it is the
//! wedge, except that `q^k`, `s^k`, `l^k` written without spaces stay
//! powers.

use crate::clifford::Algebra;
use crate::coeff::{Poly, RatFunc};
use crate::exterior::{Blade, Multivector};
use crate::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Scalar,
    Multivector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    S,
    Q,
    L,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    /// A scalar variable raised to an integer power.
    Var(Var, i32),
    /// Raw blade index text after the `e`, with its source position.
    Blade(String, usize),
    /// A named element such as `b1`, `Ysym`, `u`, `C3`.
    Name(String, usize),
    Neg(Box<Expr>),
    Reverse(Box<Expr>),
    Pow(Box<Expr>, i32),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
    Contract(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(Var, i32),
    Blade(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Contract,
    Tilde,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(text: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
        let mut out = Vec::new();
        loop {
            let t = lx.next()?;
            let done = t.0 == Tok::End;
            out.push(t);
            if done {
                return Ok(out);
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn next(&mut self) -> Result<(Tok, usize)> {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(c) = self.peek() else { return Ok((Tok::End, start)) };
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'~' => {
                self.pos += 1;
                Tok::Tilde
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'_' if self.src.get(self.pos + 1) == Some(&b'|') => {
                self.pos += 2;
                Tok::Contract
            }
            b'0'..=b'9' => Tok::Int(self.digits().parse().unwrap()),
            c if c.is_ascii_alphabetic() => {
                if c == b'e' && self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                    let s = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_digit() || c == b',') {
                        self.pos += 1;
                    }
                    let raw = std::str::from_utf8(&self.src[s..self.pos]).unwrap();
                    return Ok((Tok::Blade(raw.trim_end_matches(',').to_string()), start));
                }
                while self.peek().is_some_and(|c| {
                    c.is_ascii_alphanumeric() || (c == b'_' && self.src.get(self.pos + 1) != Some(&b'|'))
                }) {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let var = match word {
                    "q" => Some(Var::Q),
                    "s" => Some(Var::S),
                    "l" => Some(Var::L),
                    _ => None,
                };
                match var {
                    Some(v) => {
                        let exp = self.joined_power()?;
                        Tok::Var(v, exp)
                    }
                    None => Tok::Ident(word.to_string()),
                }
            }
            other => return Err(Error::parse(start, format!("unexpected character '{}'", other as char))),
        };
        Ok((tok, start))
    }

    /// `^k` or `^-k` directly after a variable.
    fn joined_power(&mut self) -> Result<i32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        let save = self.pos;
        self.pos += 1;
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos = save;
            return Ok(1);
        }
        let at = self.pos;
        let k: i32 = self.digits().parse().map_err(|_| Error::parse(at, "exponent too large"))?;
        Ok(if neg { -k } else { k })
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    mode: Mode,
}

pub fn parse(text: &str, mode: Mode) -> Result<Expr> {
    let mut p = Parser { toks: Lexer::tokens(text)?, i: 0, mode };
    let e = p.sum()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(Error::parse(p.pos(), format!("unexpected token {t:?}"))),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> usize {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if t != Tok::End {
            self.i += 1;
        }
        t
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.wedge()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.wedge()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.wedge()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn wedge(&mut self) -> Result<Expr> {
        let mut lhs = self.contraction()?;
        while self.mode == Mode::Multivector && *self.peek() == Tok::Caret {
            self.bump();
            lhs = Expr::Wedge(Box::new(lhs), Box::new(self.contraction()?));
        }
        Ok(lhs)
    }

    fn contraction(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Contract {
            if self.mode == Mode::Scalar {
                return Err(Error::parse(self.pos(), "contraction in a scalar expression"));
            }
            self.bump();
            lhs = Expr::Contract(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Tok::Tilde => {
                if self.mode == Mode::Scalar {
                    return Err(Error::parse(self.pos(), "reversion in a scalar expression"));
                }
                self.bump();
                Ok(Expr::Reverse(Box::new(self.unary()?)))
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.mode == Mode::Scalar && *self.peek() == Tok::Caret {
            self.bump();
            let neg = if *self.peek() == Tok::Minus {
                self.bump();
                true
            } else {
                false
            };
            let at = self.pos();
            match self.bump() {
                Tok::Int(k) => {
                    let k: i32 = k.try_into().map_err(|_| Error::parse(at, "exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
                }
                _ => return Err(Error::parse(at, "expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let at = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Var(v, k) => Ok(Expr::Var(v, k)),
            Tok::Blade(raw) => {
                if self.mode == Mode::Scalar {
                    return Err(Error::parse(at, "blade in a scalar expression"));
                }
                Ok(Expr::Blade(raw, at))
            }
            Tok::Ident(name) => {
                if self.mode == Mode::Scalar {
                    return Err(Error::parse(at, format!("unknown variable '{name}'")));
                }
                Ok(Expr::Name(name, at))
            }
            Tok::LParen => {
                let e = self.sum()?;
                let close = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(e),
                    _ => Err(Error::parse(close, "expected ')'")),
                }
            }
            Tok::End => Err(Error::parse(at, "unexpected end of input")),
            t => Err(Error::parse(at, format!("unexpected token {t:?}"))),
        }
    }
}

fn var_value(v: Var, k: i32) -> Result<RatFunc> {
    let base = match v {
        Var::S => RatFunc::s(),
        Var::Q => RatFunc::from_poly(Poly::q()),
        Var::L => RatFunc::lambda(),
    };
    base.pow(k)
}

pub fn eval_scalar(e: &Expr) -> Result<RatFunc> {
    Ok(match e {
        Expr::Int(n) => RatFunc::constant(crate::coeff::Rational::from_integer(n.clone())),
        Expr::Var(v, k) => var_value(*v, *k)?,
        Expr::Neg(a) => -eval_scalar(a)?,
        Expr::Pow(a, k) => eval_scalar(a)?.pow(*k)?,
        Expr::Add(a, b) => eval_scalar(a)? + eval_scalar(b)?,
        Expr::Sub(a, b) => eval_scalar(a)? - eval_scalar(b)?,
        Expr::Mul(a, b) => eval_scalar(a)? * eval_scalar(b)?,
        Expr::Div(a, b) => eval_scalar(a)?.checked_div(&eval_scalar(b)?)?,
        Expr::Blade(_, at) | Expr::Name(_, at) => return Err(Error::parse(*at, "not a scalar expression")),
        _ => return Err(Error::parse(0, "not a scalar expression")),
    })
}

/// Resolves named elements and supplies the algebra for products.
pub trait Env {
    fn dim(&self) -> usize;
    fn algebra(&self) -> Option<&Algebra>;
    /// `None` if the name is unknown.
    fn lookup(&self, name: &str) -> Option<Result<Multivector>>;
}

/// Pure Grassmann context: wedge and scalar products only.
pub struct GrassmannEnv {
    pub dim: usize,
}

impl Env for GrassmannEnv {
    fn dim(&self) -> usize {
        self.dim
    }
    fn algebra(&self) -> Option<&Algebra> {
        None
    }
    fn lookup(&self, _: &str) -> Option<Result<Multivector>> {
        None
    }
}

/// Split raw blade text into indices. Below dimension 10 every digit is an
/// index; otherwise indices are comma-separated.
fn blade_indices(raw: &str, dim: usize, at: usize) -> Result<Vec<usize>> {
    let parts: Vec<usize> = if raw.contains(',') || dim >= 10 {
        raw.split(',')
            .map(|p| p.parse::<usize>().map_err(|_| Error::parse(at, "bad blade index")))
            .collect::<Result<_>>()?
    } else {
        raw.bytes().map(|b| (b - b'0') as usize).collect()
    };
    for &i in &parts {
        if i == 0 || i > dim {
            return Err(Error::IndexOutOfRange { index: i, max: dim });
        }
    }
    Ok(parts)
}

pub fn eval_multivector(e: &Expr, env: &dyn Env) -> Result<Multivector> {
    let dim = env.dim();
    let need_alg = |what: &str| -> Result<&Algebra> {
        env.algebra().ok_or_else(|| Error::InvalidArgument(format!("{what} needs a bilinear form")))
    };
    Ok(match e {
        Expr::Int(_) | Expr::Var(..) | Expr::Pow(..) => Multivector::scalar(dim, eval_scalar(e)?),
        Expr::Blade(raw, at) => {
            let idx = blade_indices(raw, dim, *at)?;
            // Written order may be arbitrary; the wedge supplies the sign.
            let mut acc = Multivector::scalar(dim, RatFunc::one());
            for i in idx {
                acc = acc.wedge(&Multivector::blade(dim, Blade::from_indices(&[i])))?;
            }
            acc
        }
        Expr::Name(name, at) => match env.lookup(name) {
            Some(v) => v?,
            None => return Err(Error::parse(*at, format!("unknown name '{name}'"))),
        },
        Expr::Neg(a) => -&eval_multivector(a, env)?,
        Expr::Reverse(a) => need_alg("reversion")?.reversion(&eval_multivector(a, env)?)?,
        Expr::Add(a, b) => eval_multivector(a, env)?.try_add(&eval_multivector(b, env)?)?,
        Expr::Sub(a, b) => eval_multivector(a, env)?.try_sub(&eval_multivector(b, env)?)?,
        Expr::Mul(a, b) => {
            let (x, y) = (eval_multivector(a, env)?, eval_multivector(b, env)?);
            if let Some(c) = x.as_scalar() {
                y.scale(&c)
            } else if let Some(c) = y.as_scalar() {
                x.scale(&c)
            } else {
                need_alg("the Clifford product")?.mul(&x, &y)?
            }
        }
        Expr::Div(a, b) => {
            let (x, y) = (eval_multivector(a, env)?, eval_multivector(b, env)?);
            let c = y.as_scalar().ok_or_else(|| Error::NonScalar(y.to_string()))?;
            x.scale(&c.inv()?)
        }
        Expr::Wedge(a, b) => eval_multivector(a, env)?.wedge(&eval_multivector(b, env)?)?,
        Expr::Contract(a, b) => {
            let (x, y) = (eval_multivector(a, env)?, eval_multivector(b, env)?);
            need_alg("contraction")?.contract(&x, &y)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("a + b * c ^ d _| ~f", Mode::Multivector).unwrap();
        fn strip(e: &Expr) -> String {
            match e {
                Expr::Name(s, _) => s.clone(),
                Expr::Add(a, b) => format!("({}+{})", strip(a), strip(b)),
                Expr::Mul(a, b) => format!("({}*{})", strip(a), strip(b)),
                Expr::Wedge(a, b) => format!("({}^{})", strip(a), strip(b)),
                Expr::Contract(a, b) => format!("({}_|{})", strip(a), strip(b)),
                Expr::Reverse(a) => format!("~{}", strip(a)),
                other => format!("{other:?}"),
            }
        }
        assert_eq!(strip(&e), "(a+(b*(c^(d_|~f))))");
    }

    #[test]
    fn left_associative() {
        let v = eval_scalar(&parse("8/2/2", Mode::Scalar).unwrap()).unwrap();
        assert_eq!(v, RatFunc::integer(2));
        let v = eval_scalar(&parse("1-2-3", Mode::Scalar).unwrap()).unwrap();
        assert_eq!(v, RatFunc::integer(-4));
    }

    #[test]
    fn joined_power_in_multivector_mode() {
        let e = parse("q^2*e1", Mode::Multivector).unwrap();
        assert!(matches!(e, Expr::Mul(ref a, _) if **a == Expr::Var(Var::Q, 2)));
        let e = parse("e1 ^ e2", Mode::Multivector).unwrap();
        assert!(matches!(e, Expr::Wedge(..)));
    }

    #[test]
    fn error_positions() {
        match parse("e1 + * e2", Mode::Multivector) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        match parse("(1+q", Mode::Scalar) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("1 $ 2", Mode::Scalar), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn blade_index_splitting() {
        assert_eq!(blade_indices("13", 4, 0).unwrap(), vec![1, 3]);
        assert_eq!(blade_indices("1,13", 14, 0).unwrap(), vec![1, 13]);
        assert_eq!(blade_indices("12", 12, 0).unwrap(), vec![12]);
        assert!(blade_indices("12", 10, 0).is_err());
        assert!(blade_indices("15", 4, 0).is_err());
    }
}
