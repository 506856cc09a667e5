use super::point::{Guard, Point, QPoint};
use super::{int, Poly, Rational};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of `Q(s, l)` in canonical form.
///
/// Numerator and denominator are coprime, both have integer coefficients
/// with joint content one, and the denominator's leading coefficient
/// (graded-lex, `s > l`) is positive. Equal values therefore have identical
/// representations, so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn s() -> Self {
        Self::from_poly(Poly::s())
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    pub fn lambda() -> Self {
        Self::from_poly(Poly::lambda())
    }

    pub fn from_poly(p: Poly) -> Self {
        let mut num = p;
        let mut den = Poly::one();
        Poly::integer_normalize_pair(&mut num, &mut den);
        RatFunc { num, den }
    }

    /// Canonical representative of `num / den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Poly::integer_normalize_pair(&mut num, &mut den);
        Ok(RatFunc { num, den })
    }

    /// Build from parts already known to be coprime.
    fn from_coprime(mut num: Poly, mut den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        Poly::integer_normalize_pair(&mut num, &mut den);
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value as a rational constant, if it does not depend on `s` or `l`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        Some(self.num.as_constant()? / self.den.as_constant()?)
    }

    /// True when no odd power of `s` occurs, i.e. the value lies in `Q(q, l)`.
    pub fn is_even_in_s(&self) -> bool {
        self.num.is_even_in_s() && self.den.is_even_in_s()
    }

    pub fn total_degree(&self) -> usize {
        self.num.total_degree().unwrap_or(0) + self.den.total_degree().unwrap_or(0)
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.recip_unchecked())
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip_unchecked())
    }

    fn recip_unchecked(&self) -> RatFunc {
        RatFunc::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc::from_coprime(base.num.pow(k), base.den.pow(k)))
    }

    /// Exact specialization at `(s0, l0)`.
    pub fn evaluate(&self, s0: &Rational, l0: &Rational) -> Result<Rational> {
        self.evaluate_at(&Point::s(s0.clone(), l0.clone()))
    }

    /// Exact specialization at a point. A vanishing denominator is reported
    /// as the named guard it violates.
    pub fn evaluate_at(&self, point: &Point) -> Result<Rational> {
        self.check_guards(point)?;
        let v = match &point.q {
            QPoint::S(s) => {
                let d = self.den.eval(s, &point.lambda);
                if d.is_zero() {
                    return Err(Error::Guard(Guard::Denominator(super::text::render_poly(&self.den))));
                }
                self.num.eval(s, &point.lambda) / d
            }
            QPoint::Q(q) => {
                let pair = match (self.num.eval_q(q, &point.lambda), self.den.eval_q(q, &point.lambda)) {
                    (Some(n), Some(d)) => Some((n, d)),
                    // odd in s: take the positive root when q is a square
                    _ => point.s_value().map(|s| (self.num.eval(&s, &point.lambda), self.den.eval(&s, &point.lambda))),
                };
                let Some((n, d)) = pair else {
                    return Err(Error::NotRational(format!("{self} needs sqrt(q) at {point}")));
                };
                if d.is_zero() {
                    return Err(Error::Guard(Guard::Denominator(super::text::render_poly(&self.den))));
                }
                n / d
            }
            QPoint::RootOf(_) => {
                let n = self.num.eval_lambda(&point.lambda);
                let d = self.den.eval_lambda(&point.lambda);
                match (n.as_constant(), d.as_constant()) {
                    _ if n.is_zero() => Rational::zero(),
                    (Some(n), Some(d)) if !d.is_zero() => n / d,
                    _ => {
                        return Err(Error::NotRational(format!("{self} at {point}")));
                    }
                }
            }
        };
        Ok(v)
    }

    /// Fails with the violated guard if the denominator vanishes at `point`
    /// because of one of the named generic-`q` conditions.
    pub fn check_guards(&self, point: &Point) -> Result<()> {
        if self.den.is_constant() {
            return Ok(());
        }
        match Guard::identify(&self.den, point) {
            Some(g) => Err(Error::Guard(g)),
            None => Ok(()),
        }
    }

    /// Specialize and embed back as a constant.
    pub fn specialize(&self, point: &Point) -> Result<RatFunc> {
        self.evaluate_at(point).map(RatFunc::constant)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_constant() {
                return RatFunc::from_coprime(num, self.den.clone());
            }
            return RatFunc::normalize(num, self.den.clone()).expect("nonzero denominator");
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        let (a, b) = if g.is_constant() {
            (rhs.den.clone(), self.den.clone())
        } else {
            (rhs.den.div_exact(&g).unwrap(), self.den.div_exact(&g).unwrap())
        };
        let num = &(&self.num * &a) + &(&rhs.num * &b);
        let den = &self.den * &a;
        if g.is_constant() {
            // Coprime denominators: num shares no factor with either of them.
            return RatFunc::from_coprime(num, den);
        }
        RatFunc::normalize(num, den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let cancel = |n: &Poly, d: &Poly| -> (Poly, Poly) {
            let g = Poly::gcd(n, d);
            if g.is_constant() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFunc::from_coprime(&a * &c, &b * &d)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::integer(n)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(text: &str) -> RatFunc {
        text.parse().unwrap()
    }

    #[test]
    fn field_arith_examples() {
        // (s^2 + s) / (s + 1) = s
        assert_eq!(rf("s^2+s") / rf("s+1"), RatFunc::s());
        assert_eq!(RatFunc::q() * RatFunc::q().inv().unwrap(), RatFunc::one());
        assert_eq!(rf("1-q") + RatFunc::q() * RatFunc::one(), RatFunc::one());
        assert_eq!(RatFunc::one().checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalize_examples() {
        let n = RatFunc::normalize(rf("s^4-1").numer().clone(), rf("s^2-1").numer().clone());
        assert_eq!(n.unwrap(), rf("s^2+1"));
        let z = RatFunc::normalize(Poly::zero(), rf("s+1").numer().clone()).unwrap();
        assert!(z.numer().is_zero() && z.denom().is_one());
        let h = RatFunc::normalize(rf("2*s").numer().clone(), Poly::integer(4)).unwrap();
        assert_eq!(h.numer(), &Poly::s());
        assert_eq!(h.denom(), &Poly::integer(2));
        assert_eq!(RatFunc::normalize(Poly::one(), Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalize_sign_and_content() {
        // (-2)/(-4q) -> 1/(2q)
        let a = RatFunc::normalize(Poly::integer(-2), rf("-4*q").numer().clone()).unwrap();
        assert_eq!(a.numer(), &Poly::one());
        assert_eq!(a.denom(), &Poly::monomial(int(2), 2, 0));
        // idempotent
        let b = RatFunc::normalize(a.numer().clone(), a.denom().clone()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn evaluate_examples() {
        let f = rf("1/(1+q)");
        assert_eq!(f.evaluate(&int(1), &int(1)).unwrap(), Rational::new(1.into(), 2.into()));
        let err = f.evaluate_at(&Point::q(int(-1), int(1))).unwrap_err();
        assert_eq!(err, Error::Guard(Guard::OnePlusQ));
        assert_eq!(err.to_string(), "guard violated: 1+q=0");
        // b^2 coefficient (1-q) vanishes at q = 1
        assert!(rf("1-q").evaluate(&int(1), &int(1)).unwrap().is_zero());
    }

    #[test]
    fn named_guards() {
        let at = |p: Point, t: &str| rf(t).evaluate_at(&p).unwrap_err();
        assert_eq!(at(Point::s(int(0), int(1)), "1/q"), Error::Guard(Guard::QZero));
        assert_eq!(at(Point::s(int(0), int(1)), "1/s"), Error::Guard(Guard::QZero));
        assert_eq!(at(Point::s(int(2), int(0)), "q/l"), Error::Guard(Guard::LambdaZero));
        assert_eq!(at(Point::root_of(Guard::CubicQ, int(1)), "q/(q^2+q+1)"), Error::Guard(Guard::CubicQ));
        // q/(s-2) at s = 2 is not one of the named guards
        assert!(matches!(at(Point::s(int(2), int(1)), "q/(s-2)"), Error::Guard(Guard::Denominator(_))));
        // a cube-root point does not trip the 1+q guard
        assert!(rf("1/(1+q)").check_guards(&Point::root_of(Guard::CubicQ, int(1))).is_ok());
    }

    #[test]
    fn q_point_odd_needs_square() {
        assert!(matches!(RatFunc::s().evaluate_at(&Point::q(int(2), int(1))), Err(Error::NotRational(_))));
        assert_eq!(RatFunc::s().evaluate_at(&Point::q(int(4), int(1))).unwrap(), int(2));
        assert_eq!(RatFunc::q().evaluate_at(&Point::q(int(4), int(1))).unwrap(), int(4));
    }
}
