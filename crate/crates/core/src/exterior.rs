//! The Grassmann algebra over a space of dimension `2n`: blades, the wedge
//! product, grading and the main involution.

use crate::coeff::RatFunc;
use crate::expr::{self, GrassmannEnv, Mode};
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Maximum supported ambient dimension.
pub const MAX_DIM: usize = 32;

/// A basis monomial `e_S` for a subset `S` of `{1..dim}`; bit `i-1` of the
/// mask marks index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_indices(indices: &[usize]) -> Blade {
        Blade(indices.iter().fold(0, |m, &i| m | (1u32 << (i - 1))))
    }

    pub fn vector(i: usize) -> Blade {
        Blade(1 << (i - 1))
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Ascending 1-based indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |b| mask >> b & 1 == 1).map(|b| b as usize + 1)
    }

    /// Smallest index in the blade.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn without(self, i: usize) -> Blade {
        Blade(self.0 & !(1 << (i - 1)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    /// Sign of `e_S ^ e_T` relative to `e_{S u T}`, or `None` if they overlap.
    pub fn wedge_sign(self, other: Blade) -> Option<i64> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // Count pairs (a in S, b in T) with a > b.
        let mut inversions = 0;
        let mut t = other.0;
        while t != 0 {
            let b = t.trailing_zeros();
            inversions += (self.0 >> b).count_ones() - (self.0 >> b & 1);
            t &= t - 1;
        }
        Some(if inversions % 2 == 0 { 1 } else { -1 })
    }

    /// All blades of a space of dimension `dim`, in canonical order.
    pub fn all(dim: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..1u32 << dim).map(Blade).collect();
        v.sort();
        v
    }

    pub fn is_even(self) -> bool {
        self.grade() % 2 == 0
    }
}

/// Ordered by grade, then lexicographically by ascending index list.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| other.0.reverse_bits().cmp(&self.0.reverse_bits()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Blade {
    /// `1` for the scalar blade, `e13` style otherwise; comma-separated for
    /// dimensions of 10 and above.
    pub fn render(self, dim: usize) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let idx: Vec<String> = self.indices().map(|i| i.to_string()).collect();
        let sep = if dim >= 10 { "," } else { "" };
        format!("e{}", idx.join(sep))
    }
}

/// An element of the Grassmann algebra: a finite map from blades to
/// coefficients in `Q(s, l)` with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Blade, RatFunc>,
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Multivector { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, RatFunc::one())
    }

    pub fn scalar(dim: usize, c: RatFunc) -> Self {
        Self::term(dim, Blade::SCALAR, c)
    }

    pub fn blade(dim: usize, b: Blade) -> Self {
        Self::term(dim, b, RatFunc::one())
    }

    /// The basis vector `e_i`.
    pub fn vector(dim: usize, i: usize) -> Self {
        Self::blade(dim, Blade::vector(i))
    }

    /// `e_{i1} ^ ... ^ e_{ik}` for ascending indices.
    pub fn basis(dim: usize, indices: &[usize]) -> Self {
        Self::blade(dim, Blade::from_indices(indices))
    }

    pub fn term(dim: usize, b: Blade, c: RatFunc) -> Self {
        let mut m = Self::zero(dim);
        assert!(b.0 >> dim == 0, "blade outside dimension {dim}");
        m.add_term(b, c);
        m
    }

    pub fn from_terms<I: IntoIterator<Item = (Blade, RatFunc)>>(dim: usize, terms: I) -> Self {
        let mut m = Self::zero(dim);
        for (b, c) in terms {
            m.add_term(b, c);
        }
        m
    }

    /// Accumulate `c * e_b` in place.
    pub fn add_term(&mut self, b: Blade, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: Blade) -> RatFunc {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    /// The scalar value if the multivector is a pure scalar (zero counts).
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    pub fn check_dim(&self, other: &Multivector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_dim(other)?;
        let mut r = self.clone();
        for (b, c) in &other.terms {
            r.add_term(*b, c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Multivector) -> Result<Multivector> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &RatFunc) -> Multivector {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Multivector { dim: self.dim, terms: self.terms.iter().map(|(b, v)| (*b, v * c)).collect() }
    }

    /// Apply `f` to every coefficient, dropping zeros.
    pub fn try_map_coeffs<F>(&self, mut f: F) -> Result<Multivector>
    where
        F: FnMut(&RatFunc) -> Result<RatFunc>,
    {
        let mut m = Self::zero(self.dim);
        for (b, c) in &self.terms {
            m.add_term(*b, f(c)?);
        }
        Ok(m)
    }

    /// Exterior product, bilinear extension of the blade rule.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.check_dim(other)?;
        let mut r = Self::zero(self.dim);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                if let Some(sign) = s.wedge_sign(*t) {
                    let c = a * b;
                    r.add_term(Blade(s.0 | t.0), if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(r)
    }

    pub fn grade_project(&self, k: usize) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    /// The main involution: grade `k` picks up `(-1)^k`.
    pub fn grade_involute(&self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, if b.is_even() { c.clone() } else { -c })).collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.is_even())
    }

    /// Highest grade present, `None` for zero.
    pub fn max_grade(&self) -> Option<usize> {
        self.terms.keys().map(|b| b.grade()).max()
    }

    /// Sorted list of grades with nonzero components.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// Parse the text format, e.g. `(1-q)*1 - 1*e13`.
    pub fn parse(text: &str, dim: usize) -> Result<Multivector> {
        let ast = expr::parse(text, Mode::Multivector)?;
        expr::eval_multivector(&ast, &GrassmannEnv { dim })
    }
}

impl fmt::Display for Multivector {
    /// Terms in blade order as `<coeff>*<blade>`; a coefficient is
    /// parenthesized unless it is a single monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.has_negative_monomial_numer();
            let shown = if neg { -c } else { c.clone() };
            let text = if shown.renders_as_monomial() { shown.to_string() } else { format!("({shown})") };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}*{}", text, b.render(self.dim))?;
        }
        Ok(())
    }
}

/// Panics on a dimension mismatch; see [`Multivector::try_add`].
impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

/// Panics on a dimension mismatch; see [`Multivector::try_sub`].
impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("dimension mismatch")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector { dim: self.dim, terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect() }
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}
