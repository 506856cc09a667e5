//! Versor words in the Hecke generators: the eps-adjoint, generator
//! inverses, the form `Phi(x, y) = adj(x) * y`, normalization into the
//! q-spin group and conjugation.

use crate::coeff::RatFunc;
use crate::exterior::Multivector;
use crate::hecke::HeckeContext;
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Eps {
    Plus,
    #[default]
    Minus,
}

impl Eps {
    pub const BOTH: [Eps; 2] = [Eps::Minus, Eps::Plus];

    pub fn value(self) -> i64 {
        match self {
            Eps::Plus => 1,
            Eps::Minus => -1,
        }
    }

    pub fn to_ratfunc(self) -> RatFunc {
        RatFunc::integer(self.value())
    }

    /// `eps^m`.
    pub fn pow(self, m: usize) -> RatFunc {
        RatFunc::integer(if self == Eps::Minus && m % 2 == 1 { -1 } else { 1 })
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eps::Plus => "+1",
            Eps::Minus => "-1",
        })
    }
}

impl FromStr for Eps {
    type Err = Error;
    fn from_str(s: &str) -> Result<Eps> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Eps::Plus),
            "-1" | "-" => Ok(Eps::Minus),
            other => Err(Error::InvalidArgument(format!("eps must be +1 or -1, got '{other}'"))),
        }
    }
}

/// `c * b_{i1} * ... * b_{im}` together with its sign convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VersorWord {
    pub c: RatFunc,
    pub letters: Vec<usize>,
    pub eps: Eps,
}

impl VersorWord {
    pub fn new(letters: &[usize], eps: Eps) -> VersorWord {
        VersorWord { c: RatFunc::one(), letters: letters.to_vec(), eps }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation with multiplied prefactors.
    pub fn concat(&self, other: &VersorWord) -> Result<VersorWord> {
        if self.eps != other.eps {
            return Err(Error::InvalidArgument("words with different eps".into()));
        }
        let letters = [self.letters.clone(), other.letters.clone()].concat();
        Ok(VersorWord { c: &self.c * &other.c, letters, eps: self.eps })
    }

    /// All words over `1..=n` of length at most `max_len`, shortest first.
    pub fn enumerate(n: usize, max_len: usize, eps: Eps) -> Vec<VersorWord> {
        let mut out = vec![VersorWord::new(&[], eps)];
        let mut layer: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..max_len {
            layer = layer.iter().flat_map(|w| (1..=n).map(move |i| [w.clone(), vec![i]].concat())).collect();
            out.extend(layer.iter().map(|w| VersorWord::new(w, eps)));
        }
        out
    }

    pub fn word_text(&self) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("b{i}")).collect();
        parts.join(".")
    }
}

impl fmt::Display for VersorWord {
    /// `c * b1.b2.b1 [eps=-1]`; the empty word is written `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.c.numer().num_terms() == 1 { self.c.to_string() } else { format!("({})", self.c) };
        write!(f, "{c} * {} [eps={}]", self.word_text(), self.eps)
    }
}

impl FromStr for VersorWord {
    type Err = Error;
    fn from_str(text: &str) -> Result<VersorWord> {
        let bad = |m: &str| Error::InvalidArgument(format!("versor word '{text}': {m}"));
        let (body, eps) = match text.trim().rsplit_once('[') {
            Some((body, tail)) => {
                let tail = tail.trim().strip_suffix(']').ok_or_else(|| bad("missing ']'"))?;
                let e = tail.trim().strip_prefix("eps=").ok_or_else(|| bad("expected eps="))?;
                (body.trim(), e.parse()?)
            }
            None => (text.trim(), Eps::default()),
        };
        let (c, word) = match body.rsplit_once(" * ") {
            Some((c, w)) => (c.parse::<RatFunc>()?, w.trim()),
            None => (RatFunc::one(), body),
        };
        let letters = if word == "1" {
            Vec::new()
        } else {
            word.split('.')
                .map(|p| {
                    p.trim()
                        .strip_prefix('b')
                        .and_then(|d| d.parse::<usize>().ok())
                        .filter(|&i| i > 0)
                        .ok_or_else(|| bad("letters must look like b1.b2"))
                })
                .collect::<Result<_>>()?
        };
        Ok(VersorWord { c, letters, eps })
    }
}

/// `c * b_{i1} * ... * b_{im}`.
pub fn eval(ctx: &HeckeContext, w: &VersorWord) -> Result<Multivector> {
    Ok(ctx.word(&w.letters)?.scale(&ctx.coeff(w.c.clone())?))
}

/// `eps^m rev(eval(w))`.
pub fn adjoint(ctx: &HeckeContext, w: &VersorWord) -> Result<Multivector> {
    Ok(ctx.alg().reversion(&eval(ctx, w)?)?.scale(&w.eps.pow(w.len())))
}

/// The linear map `eps * rev`.
pub fn alpha_eps_linear(ctx: &HeckeContext, a: &Multivector, eps: Eps) -> Result<Multivector> {
    Ok(ctx.alg().reversion(a)?.scale(&eps.to_ratfunc()))
}

/// `eps * rev(b_i) = eps ((1-q) - b_i)`.
pub fn bar_generator(ctx: &HeckeContext, i: usize, eps: Eps) -> Result<Multivector> {
    alpha_eps_linear(ctx, &ctx.generator(i)?, eps)
}

/// `(b_i - (1-q))/q`, checked to be a two-sided inverse.
pub fn generator_inverse(ctx: &HeckeContext, i: usize) -> Result<Multivector> {
    let b = ctx.generator(i)?;
    let q = ctx.q()?;
    let inv_q = q.inv()?;
    let shift = ctx.alg().scalar(&RatFunc::one() - &q);
    let inv = (&b - &shift).scale(&inv_q);
    let one = ctx.alg().one();
    if ctx.mul(&b, &inv)? != one || ctx.mul(&inv, &b)? != one {
        return Err(Error::InvalidArgument(format!("b{i} has no two-sided inverse {inv}")));
    }
    Ok(inv)
}

/// `Phi(x, y) = adj(x) * eval(y)`.
pub fn phi(ctx: &HeckeContext, x: &VersorWord, y: &VersorWord) -> Result<Multivector> {
    if x.eps != y.eps {
        return Err(Error::InvalidArgument("Phi needs both words with the same eps".into()));
    }
    // Combine the coefficients before specializing: for normalized words
    // c_x c_y is a power of q even when s is irrational at the point.
    let c = &(&x.c * &y.c) * &x.eps.pow(x.len());
    let adj = ctx.alg().reversion(&ctx.word(&x.letters)?)?;
    Ok(ctx.mul(&adj, &ctx.word(&y.letters)?)?.scale(&ctx.coeff(c)?))
}

/// `eval(w) * adj(w)`, the product in the other order.
pub fn phi_right(ctx: &HeckeContext, w: &VersorWord) -> Result<Multivector> {
    let c = &(&w.c * &w.c) * &w.eps.pow(w.len());
    let word = ctx.word(&w.letters)?;
    Ok(ctx.mul(&word, &ctx.alg().reversion(&word)?)?.scale(&ctx.coeff(c)?))
}

/// Set `c = s^-m`. Then `Phi(w, w) = c^2 (-eps q)^m = 1`, which needs
/// `eps = -1` or an even length.
pub fn normalize_word(w: &VersorWord) -> Result<VersorWord> {
    if w.eps == Eps::Plus && w.len() % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "{} with eps=+1 has odd length; Phi(w, w) = -c^2 q^m cannot be 1",
            w.word_text()
        )));
    }
    let c = RatFunc::s().pow(-(w.len() as i32))?;
    Ok(VersorWord { c, letters: w.letters.clone(), eps: w.eps })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub even: bool,
    pub phi: Multivector,
}

/// Whether `w` lies in the q-spin group: `eval(w)` is even and
/// `Phi(w, w) = 1`. The `Phi` value is the certificate.
pub fn gamma_membership(ctx: &HeckeContext, w: &VersorWord) -> Result<Membership> {
    let even = ctx.word(&w.letters)?.is_even();
    let phi = phi(ctx, w, w)?;
    let member = even && phi == ctx.alg().one();
    Ok(Membership { member, even, phi })
}

/// `adj(w) / Phi(w, w)`.
pub fn inverse(ctx: &HeckeContext, w: &VersorWord) -> Result<Multivector> {
    let p = phi(ctx, w, w)?;
    let scalar = p.as_scalar().ok_or_else(|| Error::NonScalar(p.to_string()))?;
    if scalar.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(adjoint(ctx, w)?.scale(&scalar.inv()?))
}

/// `eval(w) * v * eval(w)^-1`.
pub fn conjugate(ctx: &HeckeContext, w: &VersorWord, v: &Multivector) -> Result<Multivector> {
    // The scalar c cancels.
    let w = &VersorWord { c: RatFunc::one(), letters: w.letters.clone(), eps: w.eps };
    let a = eval(ctx, w)?;
    let inv = inverse(ctx, w)?;
    if ctx.mul(&a, &inv)? != ctx.alg().one() {
        return Err(Error::InvalidArgument(format!("{w}: adjoint is not a right inverse")));
    }
    ctx.mul(&ctx.mul(&a, v)?, &inv)
}
