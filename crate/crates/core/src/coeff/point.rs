use super::{int, Poly, Rational};
use num_traits::{Signed, Zero};
use std::fmt;

/// The generic-`q` conditions. A denominator that vanishes at a
/// specialization point is reported as the first of these that it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Guard {
    QZero,
    OnePlusQ,
    /// `q^2 + q + 1 = 0`, i.e. `q` a primitive cube root of unity.
    CubicQ,
    LambdaZero,
    /// A denominator outside the named list (rendered).
    Denominator(String),
}

impl Guard {
    pub const NAMED: [Guard; 4] = [Guard::QZero, Guard::OnePlusQ, Guard::CubicQ, Guard::LambdaZero];

    /// The guard as a polynomial in `s` and `l`.
    pub fn poly(&self) -> Option<Poly> {
        let q = Poly::q();
        Some(match self {
            Guard::QZero => q,
            Guard::OnePlusQ => &q + &Poly::one(),
            Guard::CubicQ => &(&q.pow(2) + &q) + &Poly::one(),
            Guard::LambdaZero => Poly::lambda(),
            Guard::Denominator(_) => return None,
        })
    }

    fn vanishes_at(&self, point: &Point) -> bool {
        let Some(p) = self.poly() else { return false };
        match &point.q {
            QPoint::RootOf(g) => {
                if self == g {
                    return true;
                }
                // l = 0 is independent of the q-root.
                *self == Guard::LambdaZero && point.lambda.is_zero()
            }
            QPoint::S(s) => p.eval(s, &point.lambda).is_zero(),
            QPoint::Q(q) => p.eval_q(q, &point.lambda).is_some_and(|v| v.is_zero()),
        }
    }

    /// First named guard that vanishes at `point` and shares a factor with
    /// `den`.
    pub(crate) fn identify(den: &Poly, point: &Point) -> Option<Guard> {
        Guard::NAMED.into_iter().find(|g| {
            g.vanishes_at(point) && {
                let gp = g.poly().unwrap();
                !Poly::gcd(den, &gp).is_constant()
            }
        })
    }
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Guard::QZero => f.write_str("q=0"),
            Guard::OnePlusQ => f.write_str("1+q=0"),
            Guard::CubicQ => f.write_str("q^2+q+1=0"),
            Guard::LambdaZero => f.write_str("l=0"),
            Guard::Denominator(d) => write!(f, "{d}=0"),
        }
    }
}

/// How the `q` coordinate of a specialization point is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QPoint {
    /// `s = s0`, so `q = s0^2`.
    S(Rational),
    /// `q = q0`; only expressions even in `s` can be evaluated.
    Q(Rational),
    /// `q` is a root of one of the named guard polynomials. Nothing that
    /// depends on `q` evaluates to a rational here; only the guard check is
    /// meaningful.
    RootOf(Guard),
}

/// A point `(q, l)` at which rational functions are specialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub q: QPoint,
    pub lambda: Rational,
}

impl Point {
    pub fn s(s: Rational, lambda: Rational) -> Self {
        Point { q: QPoint::S(s), lambda }
    }

    pub fn q(q: Rational, lambda: Rational) -> Self {
        Point { q: QPoint::Q(q), lambda }
    }

    pub fn root_of(g: Guard, lambda: Rational) -> Self {
        Point { q: QPoint::RootOf(g), lambda }
    }

    /// The value of `s`: given directly, or the non-negative square root of
    /// `q` when it is the square of a rational.
    pub fn s_value(&self) -> Option<Rational> {
        match &self.q {
            QPoint::S(s) => Some(s.clone()),
            QPoint::Q(q) if !q.is_negative() => {
                let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
                (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
            }
            _ => None,
        }
    }

    /// Parse `q=<rat>,l=<rat>`, `s=<rat>,l=<rat>` or `q=root(<guard>),l=<rat>`
    /// where `<guard>` is one of `q`, `1+q`, `q^2+q+1`. A missing `l` means
    /// `l=1`.
    pub fn parse(text: &str) -> crate::Result<Point> {
        let mut q = None;
        let mut lambda = int(1);
        for part in text.split(',') {
            let part = part.trim();
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| crate::Error::InvalidArgument(format!("expected key=value, got '{part}'")))?;
            let value = value.trim();
            match key.trim() {
                "q" => {
                    if let Some(inner) = value.strip_prefix("root(").and_then(|v| v.strip_suffix(')')) {
                        let g = match inner.replace(' ', "").as_str() {
                            "q" => Guard::QZero,
                            "1+q" | "q+1" => Guard::OnePlusQ,
                            "q^2+q+1" | "1+q+q^2" => Guard::CubicQ,
                            other => {
                                return Err(crate::Error::InvalidArgument(format!(
                                    "unknown guard polynomial '{other}'"
                                )))
                            }
                        };
                        q = Some(QPoint::RootOf(g));
                    } else {
                        q = Some(QPoint::Q(parse_rational(value)?));
                    }
                }
                "s" => q = Some(QPoint::S(parse_rational(value)?)),
                "l" | "lambda" => lambda = parse_rational(value)?,
                other => return Err(crate::Error::InvalidArgument(format!("unknown coordinate '{other}'"))),
            }
        }
        let q = q.ok_or_else(|| crate::Error::InvalidArgument("missing q or s".into()))?;
        Ok(Point { q, lambda })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.q {
            QPoint::S(s) => write!(f, "s={s}")?,
            QPoint::Q(q) => write!(f, "q={q}")?,
            QPoint::RootOf(g) => {
                let p = g.to_string();
                write!(f, "q=root({})", p.trim_end_matches("=0"))?
            }
        }
        write!(f, ",l={}", self.lambda)
    }
}

pub fn parse_rational(text: &str) -> crate::Result<Rational> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| crate::Error::InvalidArgument(format!("not a rational number: '{text}'")))
}
