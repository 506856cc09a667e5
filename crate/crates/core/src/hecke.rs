//! Hecke algebra generators `b_i = e_i ^ e_{n+i}` in the Clifford algebra of
//! the Hecke form, their relations, projectors and the class sum.

use crate::clifford::{Algebra, BilinearForm};
use crate::coeff::{Point, RatFunc};
use crate::exactla;
use crate::exterior::Multivector;
use crate::{Error, Result};
use std::fmt;

/// One identity `residual = 0`, kept as data so failures can be reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub id: String,
    pub statement: String,
    pub residual: Multivector,
}

impl Relation {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, residual: Multivector) -> Self {
        Relation { id: id.into(), statement: statement.into(), residual }
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

pub type RelationReport = Vec<Relation>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The algebra, the generators and an optional specialization point. With a
/// point set, every coefficient is specialized as it is produced.
#[derive(Clone, Debug)]
pub struct HeckeContext {
    alg: Algebra,
    generators: Vec<Multivector>,
    point: Option<Point>,
}

impl HeckeContext {
    /// The context for `build_B(n)`; checks the quadratic relation.
    pub fn new(n: usize) -> Result<HeckeContext> {
        let ctx = HeckeContext::with_algebra(Algebra::build(n), None)?;
        ctx.check_quadratic()?;
        Ok(ctx)
    }

    /// The context for `build_B(n)` specialized at `point`.
    pub fn at(n: usize, point: &Point) -> Result<HeckeContext> {
        let alg = Algebra::build(n).specialize(point)?;
        let ctx = HeckeContext::with_algebra(alg, Some(point.clone()))?;
        ctx.check_quadratic()?;
        Ok(ctx)
    }

    /// Generators `e_i ^ e_{n+i}` in an arbitrary algebra of dimension `2n`,
    /// without checking any relation.
    pub fn with_algebra(alg: Algebra, point: Option<Point>) -> Result<HeckeContext> {
        let n = alg.n();
        let generators = (1..=n).map(|i| alg.basis(&[i, n + i])).collect();
        Ok(HeckeContext { alg, generators, point })
    }

    /// Explicit generators in an arbitrary algebra.
    pub fn with_generators(alg: Algebra, generators: Vec<Multivector>, point: Option<Point>) -> Result<HeckeContext> {
        if generators.len() != alg.n() {
            return Err(Error::DimensionMismatch { left: alg.n(), right: generators.len() });
        }
        Ok(HeckeContext { alg, generators, point })
    }

    /// The generators of this context carried into the algebra of the
    /// symmetric part `G`: `b_i = e_i * e_{n+i} - B(e_i, e_{n+i})` is the same
    /// Clifford element, re-expanded in the `G`-wedge basis.
    pub fn transported_to_symmetric(&self) -> Result<HeckeContext> {
        let g = self.alg.symmetrized();
        let n = self.n();
        let mut gens = Vec::with_capacity(n);
        for i in 1..=n {
            let prod = g.mul(&g.vector(i), &g.vector(n + i))?;
            gens.push(&prod - &g.scalar(self.form().get(i, n + i).clone()));
        }
        HeckeContext::with_generators(g, gens, self.point.clone())
    }

    /// Same generators with `B` replaced by its symmetric part.
    pub fn symmetrized(&self) -> HeckeContext {
        HeckeContext::with_algebra(self.alg.symmetrized(), self.point.clone()).unwrap()
    }

    fn check_quadratic(&self) -> Result<()> {
        for i in 1..=self.n() {
            let r = self.quadratic_residual(i)?;
            if !r.is_zero() {
                return Err(Error::InvalidArgument(format!("b{i} violates the quadratic relation: {r}")));
            }
        }
        Ok(())
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn form(&self) -> &BilinearForm {
        self.alg.form()
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn point(&self) -> Option<&Point> {
        self.point.as_ref()
    }

    /// Specialize a coefficient if this context has a point.
    pub fn coeff(&self, c: RatFunc) -> Result<RatFunc> {
        match &self.point {
            Some(p) => c.specialize(p),
            None => Ok(c),
        }
    }

    /// Specialize a multivector if this context has a point.
    pub fn fix(&self, m: Multivector) -> Result<Multivector> {
        match &self.point {
            Some(p) => m.try_map_coeffs(|c| c.specialize(p)),
            None => Ok(m),
        }
    }

    pub fn q(&self) -> Result<RatFunc> {
        self.coeff(RatFunc::q())
    }

    pub fn scalar(&self, c: RatFunc) -> Result<Multivector> {
        Ok(self.alg.scalar(self.coeff(c)?))
    }

    pub fn require_n(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::WrongN { expected: n, got: self.n() });
        }
        Ok(())
    }

    pub fn generator(&self, i: usize) -> Result<Multivector> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, max: self.n() });
        }
        Ok(self.generators[i - 1].clone())
    }

    pub fn generators(&self) -> &[Multivector] {
        &self.generators
    }

    pub fn mul(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        self.alg.mul(a, b)
    }

    /// `b_{i1} * ... * b_{ik}`; the empty word is `1`.
    pub fn word(&self, letters: &[usize]) -> Result<Multivector> {
        let mut acc = self.alg.one();
        for &i in letters {
            acc = self.alg.mul(&acc, &self.generator(i)?)?;
        }
        Ok(acc)
    }

    /// `b_i^2 - (1-q) b_i - q`.
    pub fn quadratic_residual(&self, i: usize) -> Result<Multivector> {
        let b = self.generator(i)?;
        let q = self.q()?;
        let one_minus_q = &RatFunc::one() - &q;
        let sq = self.alg.mul(&b, &b)?;
        Ok(&(&sq - &b.scale(&one_minus_q)) - &self.alg.scalar(q))
    }

    /// The quadratic, far-commutation and braid relations.
    pub fn verify_relations(&self) -> Result<RelationReport> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            out.push(Relation::new(
                format!("hecke.quadratic.b{i}"),
                format!("b{i}*b{i} = (1-q)*b{i} + q"),
                self.quadratic_residual(i)?,
            ));
        }
        for i in 1..=n {
            for j in i + 2..=n {
                let (bi, bj) = (self.generator(i)?, self.generator(j)?);
                out.push(Relation::new(
                    format!("hecke.commute.b{i}.b{j}"),
                    format!("b{i}*b{j} = b{j}*b{i}"),
                    self.alg.commutator(&bi, &bj)?,
                ));
            }
        }
        for i in 1..n {
            let j = i + 1;
            out.push(Relation::new(
                format!("hecke.braid.b{i}.b{j}"),
                format!("b{i}*b{j}*b{i} = b{j}*b{i}*b{j}"),
                &self.word(&[i, j, i])? - &self.word(&[j, i, j])?,
            ));
        }
        Ok(out)
    }

    /// `P_i^+ = (q + b_i)/(1+q)` and `P_i^- = (1 - b_i)/(1+q)`.
    pub fn projector(&self, i: usize, sign: Sign) -> Result<Multivector> {
        let b = self.generator(i)?;
        let q = RatFunc::q();
        let norm = self.coeff((&RatFunc::one() + &q).inv()?)?;
        let m = match sign {
            Sign::Plus => &self.alg.scalar(self.coeff(q)?) + &b,
            Sign::Minus => &self.alg.one() - &b,
        };
        Ok(m.scale(&norm))
    }

    /// `[1, b1, b2, b1 b2, b2 b1, b1 b2 b1]`, checked to be independent.
    pub fn hecke_basis(&self) -> Result<Vec<Multivector>> {
        self.require_n(2)?;
        let words: [&[usize]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];
        let basis = words.iter().map(|w| self.word(w)).collect::<Result<Vec<_>>>()?;
        let r = exactla::span_rank(&basis);
        if r != 6 {
            return Err(Error::InvalidArgument(format!("Hecke basis has rank {r}, expected 6")));
        }
        Ok(basis)
    }

    /// `C3 = b1 + b2 + (1/q) b1 b2 b1`.
    pub fn class_sum(&self) -> Result<Multivector> {
        self.require_n(2)?;
        let inv_q = self.coeff(RatFunc::q().inv()?)?;
        let b121 = self.word(&[1, 2, 1])?;
        Ok(&(&self.generator(1)? + &self.generator(2)?) + &b121.scale(&inv_q))
    }
}
