//! Exact arithmetic in `Q(s, l)` with the convention `q = s^2`.
//!
//! The square root `s` of `q` is an honest variable so that versor
//! normalization never needs a field extension. Everything that does not
//! ask for `sqrt(q)` stays even in `s` and renders in terms of `q`.

mod point;
mod poly;
mod ratfunc;
mod text;
mod upoly;

pub use point::{parse_rational, Guard, Point, QPoint};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use text::render_poly;

/// Arbitrary-precision rational scalars.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
