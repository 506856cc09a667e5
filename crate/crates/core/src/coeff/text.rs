//! Text form of polynomials and rational functions.
//!
//! Variables render as `q` and `l` when every power of `s` is even, and as
//! `s` and `l` otherwise. Terms are listed by ascending total degree.

use super::{Poly, RatFunc, Rational};
use crate::expr::{self, Mode};
use num_traits::{One, Signed};
use std::fmt;
use std::str::FromStr;

fn render_poly_with(p: &Poly, q_mode: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<((usize, usize), &Rational)> =
        p.terms().map(|((ds, dl), c)| ((if q_mode { ds / 2 } else { ds }, dl), c)).collect();
    terms.sort_by_key(|&((a, b), _)| (a + b, b));
    let mut out = String::new();
    for (i, ((dv, dl), c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let abs = c.abs();
        let var = if q_mode { "q" } else { "s" };
        let mut factors = Vec::new();
        for (name, d) in [(var, dv), ("l", dl)] {
            match d {
                0 => {}
                1 => factors.push(name.to_string()),
                d => factors.push(format!("{name}^{d}")),
            }
        }
        if factors.is_empty() || !abs.is_one() {
            factors.insert(0, abs.to_string());
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Render a bare polynomial (used in error messages).
pub fn render_poly(p: &Poly) -> String {
    render_poly_with(p, p.is_even_in_s())
}

/// True if the text is a single atom that needs no parentheses as a divisor.
fn is_atom(p: &Poly) -> bool {
    if p.num_terms() != 1 {
        return false;
    }
    let ((ds, dl), c) = p.terms().next().unwrap();
    if ds == 0 && dl == 0 {
        return c.is_integer() && !c.is_negative();
    }
    c.is_one() && (ds == 0 || dl == 0)
}

impl RatFunc {
    /// True if the rendering is a single signed monomial without `/`, so it
    /// can stand unparenthesized as a coefficient.
    pub(crate) fn renders_as_monomial(&self) -> bool {
        self.denom().is_one() && self.numer().num_terms() == 1
    }

    /// True if the numerator is a single negative term, so the sign can be
    /// pulled out in front of the coefficient.
    pub(crate) fn has_negative_monomial_numer(&self) -> bool {
        self.numer().num_terms() == 1 && self.numer().terms().next().is_some_and(|(_, c)| c.is_negative())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q_mode = self.is_even_in_s();
        let num = render_poly_with(self.numer(), q_mode);
        if self.denom().is_one() {
            return f.write_str(&num);
        }
        let den = render_poly_with(self.denom(), q_mode);
        let num = if self.numer().num_terms() > 1 { format!("({num})") } else { num };
        let den = if is_atom(self.denom()) { den } else { format!("({den})") };
        write!(f, "{num}/{den}")
    }
}

impl FromStr for RatFunc {
    type Err = crate::Error;

    /// Parse an expression in `q`, `s`, `l` with `+ - * /`, integer powers
    /// and parentheses.
    fn from_str(text: &str) -> crate::Result<RatFunc> {
        let ast = expr::parse(text, Mode::Scalar)?;
        expr::eval_scalar(&ast)
    }
}
