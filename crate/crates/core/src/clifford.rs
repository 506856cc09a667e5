//! Clifford algebra of multivectors over an arbitrary bilinear form.
//!
//! The product is built on the Grassmann basis from the contraction and the
//! wedge: for a vector `x`, `x * w = x _| w + x ^ w`, and a blade
//! `e_i ^ u'` (with `i` its smallest index) multiplies as
//! `e_i * (u' * v) - (e_i _| u') * v`. Blade products and reversions are
//! memoized per algebra.

use crate::coeff::{Point, RatFunc};
use crate::exterior::{Blade, Multivector, MAX_DIM};
use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

/// A `2n x 2n` matrix of values `B(e_i, e_j)`, not necessarily symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    n: usize,
    entries: Vec<RatFunc>,
}

impl BilinearForm {
    /// The Hecke form: `B(e_i, e_{n+j}) = q d_ij` and
    /// `B(e_{n+i}, e_j) = d_ij + l d_{j,i+1} + (q/l) d_{j,i-1}` for
    /// `i, j <= n`, zero in the diagonal blocks.
    pub fn build(n: usize) -> BilinearForm {
        assert!(n >= 1 && 2 * n <= MAX_DIM, "n out of range");
        let mut f = BilinearForm::zero(n);
        let q = RatFunc::q();
        let l = RatFunc::lambda();
        let q_over_l = &q / &l;
        for i in 1..=n {
            f.set(i, n + i, q.clone());
            f.set(n + i, i, RatFunc::one());
            if i < n {
                f.set(n + i, i + 1, l.clone());
            }
            if i > 1 {
                f.set(n + i, i - 1, q_over_l.clone());
            }
        }
        f
    }

    /// Every delta term of the Hecke form applied over all index pairs in
    /// `1..=2n`, without restricting to the off-diagonal blocks.
    pub fn build_unrestricted(n: usize) -> BilinearForm {
        let mut f = BilinearForm::zero(n);
        let (q, l) = (RatFunc::q(), RatFunc::lambda());
        let q_over_l = &q / &l;
        let n = n as i64;
        for i in 1..=2 * n {
            for j in 1..=2 * n {
                let mut v = RatFunc::zero();
                if i == j - n {
                    v = &v + &q;
                }
                if i - n == j - 1 {
                    v = &v + &l;
                }
                if i - n == j {
                    v = &v + &RatFunc::one();
                }
                if i - n - 1 == j {
                    v = &v + &q_over_l;
                }
                f.set(i as usize, j as usize, v);
            }
        }
        f
    }

    pub fn zero(n: usize) -> BilinearForm {
        BilinearForm { n, entries: vec![RatFunc::zero(); 4 * n * n] }
    }

    /// Build from row-major rows; the matrix must be `2n x 2n`.
    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<BilinearForm> {
        let dim = rows.len();
        if dim == 0 || dim % 2 != 0 || dim > MAX_DIM {
            return Err(Error::InvalidArgument(format!("form must be 2n x 2n, got {dim} rows")));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { left: dim, right: r.len() });
        }
        Ok(BilinearForm { n: dim / 2, entries: rows.into_iter().flatten().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// `B(e_i, e_j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[(i - 1) * self.dim() + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        let d = self.dim();
        self.entries[(i - 1) * d + (j - 1)] = v;
    }

    pub fn rows(&self) -> Vec<Vec<RatFunc>> {
        self.entries.chunks(self.dim()).map(|r| r.to_vec()).collect()
    }

    /// `G = (B + B^T) / 2`.
    pub fn symmetric_part(&self) -> BilinearForm {
        let half = RatFunc::constant(crate::coeff::ratio(1, 2));
        let mut g = BilinearForm::zero(self.n);
        for i in 1..=self.dim() {
            for j in 1..=self.dim() {
                g.set(i, j, &(self.get(i, j) + self.get(j, i)) * &half);
            }
        }
        g
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.dim()).all(|i| (1..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `B(x, y)` for grade-1 multivectors (other grades are ignored).
    pub fn eval(&self, x: &Multivector, y: &Multivector) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (bx, cx) in x.grade_project(1).terms() {
            for (by, cy) in y.grade_project(1).terms() {
                let i = bx.first().unwrap();
                let j = by.first().unwrap();
                let v = self.get(i, j);
                if !v.is_zero() {
                    acc = &acc + &(&(cx * cy) * v);
                }
            }
        }
        acc
    }

    pub fn specialize(&self, point: &Point) -> Result<BilinearForm> {
        let entries = self.entries.iter().map(|e| e.specialize(point)).collect::<Result<_>>()?;
        Ok(BilinearForm { n: self.n, entries })
    }
}

impl fmt::Display for BilinearForm {
    /// Row-major, one row per line, entries separated by `, `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.entries.chunks(self.dim()).enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `Cl(V, B)` with `dim V = 2n`.
pub struct Algebra {
    form: BilinearForm,
    products: RwLock<HashMap<(Blade, Blade), Multivector>>,
    reversions: RwLock<HashMap<Blade, Multivector>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::new(self.form.clone())
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("form", &self.form).finish()
    }
}

impl Algebra {
    pub fn new(form: BilinearForm) -> Algebra {
        Algebra { form, products: RwLock::default(), reversions: RwLock::default() }
    }

    /// The algebra of the Hecke form for `n` generators.
    pub fn build(n: usize) -> Algebra {
        Algebra::new(BilinearForm::build(n))
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn n(&self) -> usize {
        self.form.n()
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    /// Same underlying space with `B` replaced by its symmetric part.
    pub fn symmetrized(&self) -> Algebra {
        Algebra::new(self.form.symmetric_part())
    }

    pub fn specialize(&self, point: &Point) -> Result<Algebra> {
        Ok(Algebra::new(self.form.specialize(point)?))
    }

    fn check(&self, u: &Multivector) -> Result<()> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: u.dim() });
        }
        Ok(())
    }

    pub fn one(&self) -> Multivector {
        Multivector::one(self.dim())
    }

    pub fn scalar(&self, c: RatFunc) -> Multivector {
        Multivector::scalar(self.dim(), c)
    }

    pub fn vector(&self, i: usize) -> Multivector {
        Multivector::vector(self.dim(), i)
    }

    pub fn basis(&self, indices: &[usize]) -> Multivector {
        Multivector::basis(self.dim(), indices)
    }

    /// `e_i _| e_T = sum_m (-1)^(m-1) B(e_i, e_{t_m}) e_{T \ t_m}`.
    fn vector_contract_blade(&self, i: usize, t: Blade) -> Multivector {
        let mut r = Multivector::zero(self.dim());
        for (m, tm) in t.indices().enumerate() {
            let b = self.form.get(i, tm);
            if b.is_zero() {
                continue;
            }
            r.add_term(t.without(tm), if m % 2 == 0 { b.clone() } else { -b });
        }
        r
    }

    fn vector_contract(&self, i: usize, w: &Multivector) -> Multivector {
        let mut r = Multivector::zero(self.dim());
        for (t, c) in w.terms() {
            for (b, v) in self.vector_contract_blade(i, *t).terms() {
                r.add_term(*b, v * c);
            }
        }
        r
    }

    /// `(e_i ^ e_S') _| w = e_i _| (e_S' _| w)`; scalars contract as
    /// scalar multiplication.
    fn blade_contract(&self, s: Blade, w: &Multivector) -> Multivector {
        match s.first() {
            None => w.clone(),
            Some(i) => self.vector_contract(i, &self.blade_contract(s.without(i), w)),
        }
    }

    /// Left contraction `u _| v`.
    pub fn contract(&self, u: &Multivector, v: &Multivector) -> Result<Multivector> {
        self.check(u)?;
        self.check(v)?;
        let mut r = Multivector::zero(self.dim());
        for (s, a) in u.terms() {
            for (b, c) in self.blade_contract(*s, v).terms() {
                r.add_term(*b, a * c);
            }
        }
        Ok(r)
    }

    /// `e_i * w = e_i _| w + e_i ^ w`.
    fn vector_mul(&self, i: usize, w: &Multivector) -> Multivector {
        let mut r = self.vector_contract(i, w);
        let ei = Blade::vector(i);
        for (t, c) in w.terms() {
            if let Some(sign) = ei.wedge_sign(*t) {
                r.add_term(Blade(ei.0 | t.0), if sign < 0 { -c } else { c.clone() });
            }
        }
        r
    }

    /// Clifford product of two basis blades.
    pub fn blade_product(&self, s: Blade, t: Blade) -> Multivector {
        if let Some(hit) = self.products.read().unwrap().get(&(s, t)) {
            return hit.clone();
        }
        let r = match s.first() {
            None => Multivector::blade(self.dim(), t),
            Some(i) => {
                let rest = s.without(i);
                let mut r = self.vector_mul(i, &self.blade_product(rest, t));
                for (b, c) in self.vector_contract_blade(i, rest).terms() {
                    for (bb, cc) in self.blade_product(*b, t).terms() {
                        r.add_term(*bb, -(c * cc));
                    }
                }
                r
            }
        };
        self.products.write().unwrap().insert((s, t), r.clone());
        r
    }

    /// The Clifford product `u * v`.
    pub fn mul(&self, u: &Multivector, v: &Multivector) -> Result<Multivector> {
        self.check(u)?;
        self.check(v)?;
        let mut r = Multivector::zero(self.dim());
        for (s, a) in u.terms() {
            for (t, b) in v.terms() {
                let ab = a * b;
                for (blade, c) in self.blade_product(*s, *t).terms() {
                    r.add_term(*blade, &ab * c);
                }
            }
        }
        Ok(r)
    }

    /// Left-to-right product of a sequence; the empty product is `1`.
    pub fn product<'a, I>(&self, factors: I) -> Result<Multivector>
    where
        I: IntoIterator<Item = &'a Multivector>,
    {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `u * v - v * u`.
    pub fn commutator(&self, u: &Multivector, v: &Multivector) -> Result<Multivector> {
        Ok(&self.mul(u, v)? - &self.mul(v, u)?)
    }

    fn blade_reversion(&self, s: Blade) -> Multivector {
        if s.grade() <= 1 {
            return Multivector::blade(self.dim(), s);
        }
        if let Some(hit) = self.reversions.read().unwrap().get(&s) {
            return hit.clone();
        }
        // rev(e_i ^ u') = rev(u') * e_i - rev(e_i _| u')
        let i = s.first().unwrap();
        let rest = s.without(i);
        let ei = Multivector::blade(self.dim(), Blade::vector(i));
        let mut r = self.mul(&self.blade_reversion(rest), &ei).expect("same algebra");
        for (b, c) in self.vector_contract_blade(i, rest).terms() {
            for (bb, cc) in self.blade_reversion(*b).terms() {
                r.add_term(*bb, -(c * cc));
            }
        }
        self.reversions.write().unwrap().insert(s, r.clone());
        r
    }

    /// The reversion antiautomorphism: fixes vectors and scalars and
    /// reverses Clifford products.
    pub fn reversion(&self, u: &Multivector) -> Result<Multivector> {
        self.check(u)?;
        let mut r = Multivector::zero(self.dim());
        for (s, a) in u.terms() {
            for (b, c) in self.blade_reversion(*s).terms() {
                r.add_term(*b, a * c);
            }
        }
        Ok(r)
    }

    /// The scalar `c` with `x * x = c`, checked against `G(x, x)`.
    pub fn clifford_map_square(&self, x: &Multivector) -> Result<RatFunc> {
        self.check(x)?;
        if x.terms().any(|(b, _)| b.grade() != 1) {
            return Err(Error::InvalidArgument(format!("{x} is not a vector")));
        }
        let sq = self.mul(x, x)?;
        let c = sq.as_scalar().ok_or_else(|| Error::NonScalar(sq.to_string()))?;
        let g = self.quadratic_form(x);
        if c != g {
            return Err(Error::NonScalar(format!("x*x = {c} but G(x,x) = {g}")));
        }
        Ok(c)
    }

    /// `Q(x) = G(x, x)`, the symmetric part of `B` on the diagonal.
    pub fn quadratic_form(&self, x: &Multivector) -> RatFunc {
        self.form.eval(x, x)
    }

    /// `G(x, y)`.
    pub fn symmetric_form(&self, x: &Multivector, y: &Multivector) -> RatFunc {
        let half = RatFunc::constant(crate::coeff::ratio(1, 2));
        &(&self.form.eval(x, y) + &self.form.eval(y, x)) * &half
    }

    /// Parse the multivector text format in this algebra's dimension.
    pub fn parse(&self, text: &str) -> Result<Multivector> {
        Multivector::parse(text, self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatFunc;

    fn rf(t: &str) -> RatFunc {
        t.parse().unwrap()
    }

    #[test]
    fn build_b_examples() {
        let b2 = BilinearForm::build(2);
        let expect = [["0", "0", "q", "0"], ["0", "0", "0", "q"], ["1", "l", "0", "0"], ["q/l", "1", "0", "0"]];
        for (i, row) in expect.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(b2.get(i + 1, j + 1), &rf(v), "B[{}][{}]", i + 1, j + 1);
            }
        }
        let b1 = BilinearForm::build(1);
        assert_eq!(b1.rows(), vec![vec![rf("0"), rf("q")], vec![rf("1"), rf("0")]]);
        assert_eq!(b2.symmetric_part().get(1, 3), &rf("(q+1)/2"));
        assert_eq!(b2.to_string().lines().next().unwrap(), "[0, 0, q, 0]");
    }

    #[test]
    fn unrestricted_form_extra_entries() {
        let u = BilinearForm::build_unrestricted(2);
        let b = BilinearForm::build(2);
        let mut diff = Vec::new();
        for i in 1..=4 {
            for j in 1..=4 {
                if u.get(i, j) != b.get(i, j) {
                    diff.push((i, j, u.get(i, j).to_string()));
                }
            }
        }
        assert_eq!(diff, vec![(2, 1, "l".to_string()), (4, 3, "l".to_string())]);
    }

    #[test]
    fn contraction_examples() {
        let alg = Algebra::build(2);
        let e = |i: &[usize]| alg.basis(i);
        assert_eq!(alg.contract(&e(&[1]), &e(&[3])).unwrap(), alg.scalar(RatFunc::q()));
        assert_eq!(alg.contract(&e(&[1]), &e(&[3, 4])).unwrap(), e(&[4]).scale(&RatFunc::q()));
        // scalar left factor
        let x = alg.parse("q*1 + e13").unwrap();
        assert_eq!(alg.contract(&alg.scalar(RatFunc::q()), &x).unwrap(), x.scale(&RatFunc::q()));
    }

    #[test]
    fn product_examples() {
        let alg = Algebra::build(2);
        let e = |i: &[usize]| alg.basis(i);
        assert_eq!(alg.mul(&e(&[1]), &e(&[3])).unwrap(), alg.parse("q*1 + e13").unwrap());
        assert_eq!(alg.mul(&e(&[3]), &e(&[1])).unwrap(), alg.parse("1 - e13").unwrap());
        let u = &e(&[1]) + &e(&[3]);
        assert_eq!(alg.mul(&u, &u).unwrap(), alg.parse("(1+q)*1").unwrap());
        assert!(matches!(alg.mul(&e(&[1]), &Multivector::vector(6, 1)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn reversion_examples() {
        let alg = Algebra::build(2);
        let e13 = alg.basis(&[1, 3]);
        assert_eq!(alg.reversion(&e13).unwrap(), alg.parse("(1-q)*1 - e13").unwrap());
        assert_eq!(alg.reversion(&alg.vector(1)).unwrap(), alg.vector(1));
        let qs = alg.scalar(RatFunc::q());
        assert_eq!(alg.reversion(&qs).unwrap(), qs);
    }

    #[test]
    fn clifford_map_square_examples() {
        let alg = Algebra::build(2);
        assert!(alg.clifford_map_square(&alg.vector(1)).unwrap().is_zero());
        let u = &alg.vector(1) + &alg.vector(3);
        assert_eq!(alg.clifford_map_square(&u).unwrap(), rf("1+q"));
        let w = &alg.vector(2) + &alg.vector(4);
        assert_eq!(alg.clifford_map_square(&w).unwrap(), rf("1+q"));
        assert!(alg.clifford_map_square(&alg.basis(&[1, 3])).is_err());
    }
}
