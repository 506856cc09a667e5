use super::upoly::UPoly;
use super::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in `s` and `l` with rational coefficients.
///
/// Stored recursively: `coeffs[i]` is the coefficient of `s^i`, itself a
/// polynomial in `l`. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<UPoly>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![UPoly::constant(c)])
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `c * s^ds * l^dl`.
    pub fn monomial(c: Rational, ds: usize, dl: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UPoly::zero(); ds + 1];
        coeffs[ds] = UPoly::monomial(c, dl);
        Poly { coeffs }
    }

    pub fn s() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// `q = s^2`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 2, 0)
    }

    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), Rational)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for ((ds, dl), c) in terms {
            acc = &acc + &Self::monomial(c, ds, dl);
        }
        acc
    }

    pub(crate) fn from_coeffs(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(UPoly::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Nonzero terms as `((deg_s, deg_l), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(ds, u)| {
            u.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(dl, c)| ((ds, dl), c))
        })
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().map(UPoly::num_terms).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        match self.coeffs.as_slice() {
            [] => None,
            [c] if c.degree() == Some(0) => c.lc(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.num_terms() == 1
    }

    pub fn deg_s(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_l(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UPoly::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().map(|((a, b), _)| a + b).max()
    }

    /// True if every term has even degree in `s`, i.e. the polynomial is a
    /// polynomial in `q`.
    pub fn is_even_in_s(&self) -> bool {
        self.terms().all(|((ds, _), _)| ds % 2 == 0)
    }

    fn s_order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn l_order(&self) -> usize {
        self.coeffs.iter().filter_map(UPoly::order).min().unwrap_or(0)
    }

    /// Leading term under graded-lexicographic order with `s > l`.
    pub fn leading_term(&self) -> Option<((usize, usize), &Rational)> {
        self.terms().max_by(|(a, _), (b, _)| grlex(*a, *b))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|u| u.scale(c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn mul_upoly(&self, c: &UPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|u| u.mul(c)).collect())
    }

    fn shift_s(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let dd = d.deg_s().unwrap();
        let dlc = &d.coeffs[dd];
        let mut r = self.clone();
        let mut quot = vec![UPoly::zero(); r.coeffs.len().saturating_sub(dd)];
        while !r.is_zero() {
            let top = r.deg_s().unwrap();
            if top < dd {
                return None;
            }
            let c = r.coeffs[top].div_exact(dlc)?;
            let shift = top - dd;
            r = &r - &d.mul_upoly(&c).shift_s(shift);
            // The subtraction must cancel the top coefficient exactly.
            debug_assert!(r.deg_s().is_none_or(|t| t < top));
            quot[shift] = c;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Content with respect to `s`: the monic gcd of the `l`-coefficients.
    fn content_s(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.coeffs {
            g = UPoly::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part(&self) -> Poly {
        let c = self.content_s();
        if c.is_one() {
            return self.clone();
        }
        Self::from_coeffs(self.coeffs.iter().map(|u| u.div_exact(&c).expect("content divides")).collect())
    }

    /// A greatest common divisor, determined up to a rational unit.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        if a.is_monomial() || b.is_monomial() {
            let (m, other) = if a.is_monomial() { (a, b) } else { (b, a) };
            let ((ms, ml), _) = m.terms().next().unwrap();
            let ds = ms.min(other.s_order());
            let dl = ml.min(other.l_order());
            return Poly::monomial(Rational::one(), ds, dl);
        }
        let ca = a.content_s();
        let cb = b.content_s();
        let content = UPoly::gcd(&ca, &cb);
        let (mut f, mut g) = (a.primitive_part(), b.primitive_part());
        if f.deg_s() < g.deg_s() {
            std::mem::swap(&mut f, &mut g);
        }
        if Self::coprime_in_s(&f, &g) {
            return Poly::from_coeffs(vec![content]);
        }
        let prim = if g.div_exact(&f).is_some() {
            f
        } else if f.div_exact(&g).is_some() {
            g
        } else {
            Self::gcd_interpolate(&f, &g)
        };
        prim.mul_upoly(&content)
    }

    /// Gcd of two polynomials primitive in `s`, by evaluating `l` at
    /// successive integers, taking univariate gcds in `s` and interpolating.
    /// The leading coefficient is fixed by scaling every image with
    /// `gamma = gcd(lc f, lc g)`; the result is confirmed by trial division.
    fn gcd_interpolate(f: &Poly, g: &Poly) -> Poly {
        let (df, dg) = (f.deg_s().unwrap(), g.deg_s().unwrap());
        let (lf, lg) = (&f.coeffs[df], &g.coeffs[dg]);
        let gamma = UPoly::gcd(lf, lg);
        let bound = gamma.degree().unwrap_or(0) + f.deg_l().unwrap().min(g.deg_l().unwrap());
        let at = |p: &Poly, l0: &Rational| UPoly::from_vec(p.coeffs.iter().map(|c| c.eval(l0)).collect());
        let mut best = usize::MAX;
        let mut points: Vec<(Rational, UPoly)> = Vec::new();
        let mut k = 0i64;
        loop {
            k += 1;
            let l0 = Rational::from_integer(k.into());
            if lf.eval(&l0).is_zero() || lg.eval(&l0).is_zero() {
                continue;
            }
            let h = UPoly::gcd(&at(f, &l0), &at(g, &l0));
            let d = h.degree().unwrap();
            if d == 0 {
                return Poly::one();
            }
            if d > best {
                continue;
            }
            if d < best {
                best = d;
                points.clear();
            }
            points.push((l0.clone(), h.scale(&gamma.eval(&l0))));
            if points.len() <= bound {
                continue;
            }
            let xs: Vec<Rational> = points.iter().map(|(x, _)| x.clone()).collect();
            let coeffs = (0..=best)
                .map(|i| {
                    let ys: Vec<Rational> =
                        points.iter().map(|(_, h)| h.coeffs().get(i).cloned().unwrap_or_else(Rational::zero)).collect();
                    UPoly::interpolate(&xs, &ys)
                })
                .collect();
            let cand = Poly::from_coeffs(coeffs).primitive_part();
            if f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                return cand;
            }
            // Every point so far was unlucky; start over.
            points.clear();
            best = usize::MAX;
        }
    }

    /// Sufficient test that the primitive gcd has `s`-degree zero: the
    /// gcd of the images at some `l = l0` keeping both leading coefficients
    /// nonzero bounds its degree from above.
    fn coprime_in_s(f: &Poly, g: &Poly) -> bool {
        let (df, dg) = (f.deg_s().unwrap(), g.deg_s().unwrap());
        if df == 0 || dg == 0 {
            return true;
        }
        (2..8)
            .map(|k| Rational::from_integer(k.into()))
            .find(|l0| !f.coeffs[df].eval(l0).is_zero() && !g.coeffs[dg].eval(l0).is_zero())
            .is_some_and(|l0| {
                let at = |p: &Poly| UPoly::from_vec(p.coeffs.iter().map(|c| c.eval(&l0)).collect());
                UPoly::gcd(&at(f), &at(g)).degree() == Some(0)
            })
    }

    pub fn eval(&self, s: &Rational, l: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * s + c.eval(l);
        }
        acc
    }

    /// Substitute `l = l0`, leaving a polynomial in `s` only.
    pub fn eval_lambda(&self, l: &Rational) -> Poly {
        Self::from_coeffs(self.coeffs.iter().map(|u| UPoly::constant(u.eval(l))).collect())
    }

    /// Evaluate at `q = q0` (requires evenness in `s`).
    pub fn eval_q(&self, q: &Rational, l: &Rational) -> Option<Rational> {
        if !self.is_even_in_s() {
            return None;
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().step_by(2).rev() {
            acc = acc * q + c.eval(l);
        }
        Some(acc)
    }

    /// Rescale a fraction so both parts have integer coefficients with joint
    /// content one and the denominator's leading coefficient is positive.
    pub(crate) fn integer_normalize_pair(num: &mut Poly, den: &mut Poly) {
        let mut lcm = BigInt::one();
        for (_, c) in num.terms().chain(den.terms()) {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in num.terms().chain(den.terms()) {
            let v = c.numer() * (&lcm / c.denom());
            g = g.gcd(&v);
        }
        let mut factor = Rational::new(lcm, g);
        if den.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            factor = -factor;
        }
        if !factor.is_one() {
            *num = num.scale(&factor);
            *den = den.scale(&factor);
        }
    }
}

/// Graded-lexicographic comparison of `(deg_s, deg_l)` with `s > l`.
pub(crate) fn grlex(a: (usize, usize), b: (usize, usize)) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = UPoly::zero();
        Poly::from_coeffs(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&zero).add(rhs.coeffs.get(i).unwrap_or(&zero))).collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(UPoly::neg).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![UPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((usize, usize), i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_integer(c.into()))))
    }

    #[test]
    fn gcd_bivariate() {
        // (s + l)(s - 1) and (s + l)(l + 2)
        let f = p(&[((0, 0), 0)]);
        assert!(f.is_zero());
        let common = p(&[((1, 0), 1), ((0, 1), 1)]);
        let a = &common * &p(&[((1, 0), 1), ((0, 0), -1)]);
        let b = &common * &p(&[((0, 1), 1), ((0, 0), 2)]);
        let g = Poly::gcd(&a, &b);
        assert!(g.div_exact(&common).is_some_and(|c| c.is_constant()), "{g:?}");
    }

    #[test]
    fn gcd_with_l_content() {
        // l*(s^2 - 1) and l^2*(s - 1)
        let a = p(&[((2, 1), 1), ((0, 1), -1)]);
        let b = p(&[((1, 2), 1), ((0, 2), -1)]);
        let g = Poly::gcd(&a, &b);
        let expect = p(&[((1, 1), 1), ((0, 1), -1)]);
        assert!(g.div_exact(&expect).is_some_and(|c| c.is_constant()), "{g:?}");
    }

    #[test]
    fn exact_division() {
        let a = p(&[((4, 0), 1), ((0, 0), -1)]);
        let b = p(&[((2, 0), 1), ((0, 0), -1)]);
        assert_eq!(a.div_exact(&b), Some(p(&[((2, 0), 1), ((0, 0), 1)])));
        assert_eq!(b.div_exact(&p(&[((1, 0), 1), ((0, 1), 1)])), None);
    }

    #[test]
    fn leading_term_grlex() {
        // s^2 + s*l^2: total degrees 2 and 3 -> s*l^2 leads
        let a = p(&[((2, 0), 1), ((1, 2), -3)]);
        assert_eq!(a.leading_term().map(|(e, _)| e), Some((1, 2)));
        // s*l vs l^2: same total degree, s wins
        let b = p(&[((0, 2), 1), ((1, 1), 1)]);
        assert_eq!(b.leading_term().map(|(e, _)| e), Some((1, 1)));
    }
}
