//! Dense linear algebra over `Q(s, l)`.
//!
//! Rank uses fraction-free elimination on polynomial rows; nullspaces and
//! solves use ordinary field elimination. All matrices here are small.

use crate::clifford::Algebra;
use crate::coeff::{Point, Poly, RatFunc};
use crate::exterior::{Blade, Multivector};
use crate::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![RatFunc::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { left: cols, right: r.len() });
        }
        Ok(Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(cols: Vec<Vec<RatFunc>>) -> Result<Matrix> {
        Ok(Matrix::from_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<RatFunc> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RatFunc::is_zero)
    }

    /// `Some(c)` if the matrix is square and equal to `c` times the identity.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { &c } else { &RatFunc::zero() };
                if self.get(i, j) != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { left: self.cols, right: rhs.rows });
        }
        let mut m = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = RatFunc::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Result<Vec<RatFunc>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { left: self.cols, right: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(RatFunc::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn specialize(&self, point: &Point) -> Result<Matrix> {
        let data = self.data.iter().map(|e| e.specialize(point)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Rank by fraction-free elimination: each row is cleared of
    /// denominators, then Bareiss steps with exact polynomial division.
    /// The pivot is a nonzero entry of least total degree.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Poly>> = (0..self.rows).map(|i| clear_denominators(self.row(i))).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = Poly::one();
        let mut rank = 0;
        let mut col_order: Vec<usize> = (0..cols).collect();
        while rank < rows.min(cols) {
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(rank) {
                for (cj, &j) in col_order.iter().enumerate().skip(rank) {
                    if let Some(d) = row[j].total_degree().filter(|_| !row[j].is_zero()) {
                        if best.is_none_or(|(_, _, bd)| d < bd) {
                            best = Some((i, cj, d));
                        }
                    }
                }
            }
            let Some((pi, pc, _)) = best else { break };
            m.swap(rank, pi);
            col_order.swap(rank, pc);
            let pj = col_order[rank];
            let pivot = m[rank][pj].clone();
            for i in rank + 1..rows {
                let factor = m[i][pj].clone();
                for &j in &col_order[rank..] {
                    let num = &(&pivot * &m[i][j]) - &(&factor * &m[rank][j]);
                    m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form over the field; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) =
                (r..self.rows).filter(|&i| !self.get(i, c).is_zero()).min_by_key(|&i| self.get(i, c).total_degree())
            else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, p * self.cols + j);
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&f * self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Indices of the columns that form the first maximal independent set,
    /// scanning left to right.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.clone().rref()
    }

    /// A basis of `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<RatFunc>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![RatFunc::zero(); self.cols];
                v[f] = RatFunc::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// A solution `x` of `M x = b` (the one with free variables zero).
    pub fn solve(&self, b: &[RatFunc]) -> Result<Vec<RatFunc>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { left: self.rows, right: b.len() });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NotInSpan("right-hand side is not in the column space".into()));
        }
        let mut x = vec![RatFunc::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Ok(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Multiply a row by the lcm of its denominators and return the numerators.
fn clear_denominators(row: &[RatFunc]) -> Vec<Poly> {
    let mut l = Poly::one();
    for e in row {
        let d = e.denom();
        if !d.is_one() {
            let g = Poly::gcd(&l, d);
            l = &l * &d.div_exact(&g).expect("gcd divides");
        }
    }
    row.iter().map(|e| (e.numer() * &l).div_exact(e.denom()).expect("lcm is a multiple")).collect()
}

/// Coordinates of `v` on a list of blades; error if `v` has other blades.
pub fn blade_coordinates(v: &Multivector, blades: &[Blade]) -> Result<Vec<RatFunc>> {
    if let Some((b, _)) = v.terms().find(|(b, _)| !blades.contains(b)) {
        return Err(Error::NotInSpan(format!("{v} has a {} component", b.render(v.dim()))));
    }
    Ok(blades.iter().map(|b| v.coeff(*b)).collect())
}

/// The `2^dim x k` matrix whose columns are the blade coordinates of `vs`.
pub fn coordinate_matrix(vs: &[Multivector], dim: usize) -> Matrix {
    let blades = Blade::all(dim);
    let cols = vs.iter().map(|v| blades.iter().map(|b| v.coeff(*b)).collect()).collect();
    Matrix::from_columns(cols).unwrap_or_else(|_| Matrix::zeros(blades.len(), 0))
}

/// Coordinates of `v` on an independent list of multivectors.
pub fn coordinates(v: &Multivector, basis: &[Multivector]) -> Result<Vec<RatFunc>> {
    let m = coordinate_matrix(basis, v.dim());
    let rhs: Vec<RatFunc> = Blade::all(v.dim()).iter().map(|b| v.coeff(*b)).collect();
    m.solve(&rhs).map_err(|_| Error::NotInSpan(format!("{v} is not in the span of the given basis")))
}

/// Rank of a list of multivectors.
pub fn span_rank(vs: &[Multivector]) -> usize {
    match vs.first() {
        None => 0,
        Some(v) => coordinate_matrix(vs, v.dim()).rank(),
    }
}

/// The matrix of `x -> a * x` from `domain` to `codomain` (all blades when
/// `codomain` is `None`): column `j` holds the coordinates of `a * domain[j]`.
pub fn left_mult_matrix(
    alg: &Algebra,
    a: &Multivector,
    domain: &[Multivector],
    codomain: Option<&[Multivector]>,
) -> Result<Matrix> {
    let blades = Blade::all(alg.dim());
    let mut cols = Vec::with_capacity(domain.len());
    for d in domain {
        let img = alg.mul(a, d)?;
        cols.push(match codomain {
            None => blade_coordinates(&img, &blades)?,
            Some(basis) => coordinates(&img, basis)?,
        });
    }
    let rows = codomain.map_or(blades.len(), <[_]>::len);
    if cols.is_empty() {
        return Ok(Matrix::zeros(rows, 0));
    }
    Matrix::from_columns(cols)
}
