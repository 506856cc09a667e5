//! Dense univariate polynomials over the rationals. These are the
//! coefficients of [`Poly`](super::Poly) when it is viewed as a polynomial
//! in `s` over `Q[l]`.

use super::Rational;
use num_traits::{One, Zero};

/// Ascending coefficients, no trailing zeros. The zero polynomial is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_vec(vec![c])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); deg + 1];
        v[deg] = c;
        UPoly(v)
    }

    pub fn from_vec(mut v: Vec<Rational>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        UPoly(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&Rational> {
        self.0.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = rhs.0.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_vec(v)
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::from_vec(v)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.0[dd].recip();
        let mut r = self.0.clone();
        let mut quot = vec![Rational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = &r[top] * &lc_inv;
            if !c.is_zero() {
                let shift = top - dd;
                for (j, dc) in d.0.iter().enumerate() {
                    r[shift + j] -= &c * dc;
                }
                quot[shift] = c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Self::from_vec(quot), Self::from_vec(r))
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn make_monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut f, mut g) = (a.clone(), b.clone());
        while !g.is_zero() {
            if g.degree() == Some(0) {
                return Self::one();
            }
            let (_, r) = f.divrem(&g);
            f = g;
            g = if r.is_zero() { r } else { r.make_monic() };
        }
        f.make_monic()
    }

    /// The polynomial of degree below `xs.len()` through the points, by
    /// Newton's divided differences.
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Self {
        let n = xs.len();
        let mut c = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                c[i] = (&c[i] - &c[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut out = Self::constant(c[n - 1].clone());
        for i in (0..n - 1).rev() {
            let lin = Self::from_vec(vec![-xs[i].clone(), Rational::one()]);
            out = out.mul(&lin).add(&Self::constant(c[i].clone()));
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}
