//! q-Young operators for `H_3(q)`, their left ideals, the class-sum
//! spectrum and the four-dimensional spinor spaces.

use crate::coeff::{Point, RatFunc};
use crate::exactla::{self, Matrix};
use crate::exterior::{Blade, Multivector};
use crate::hecke::{HeckeContext, Relation, RelationReport};
use crate::{Error, Result};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum YoungLabel {
    Sym,
    Mixed12,
    Mixed13,
    Asym,
}

impl YoungLabel {
    pub const ALL: [YoungLabel; 4] = [YoungLabel::Sym, YoungLabel::Mixed12, YoungLabel::Mixed13, YoungLabel::Asym];

    /// Name used in expressions (`Ysym`, `Y12_3`, `Y13_2`, `Yasym`).
    pub fn name(self) -> &'static str {
        match self {
            YoungLabel::Sym => "Ysym",
            YoungLabel::Mixed12 => "Y12_3",
            YoungLabel::Mixed13 => "Y13_2",
            YoungLabel::Asym => "Yasym",
        }
    }

    pub fn from_name(name: &str) -> Option<YoungLabel> {
        YoungLabel::ALL.into_iter().find(|l| l.name() == name)
    }

    pub fn is_mixed(self) -> bool {
        matches!(self, YoungLabel::Mixed12 | YoungLabel::Mixed13)
    }
}

impl fmt::Display for YoungLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            YoungLabel::Sym => "sym",
            YoungLabel::Mixed12 => "12|3",
            YoungLabel::Mixed13 => "13|2",
            YoungLabel::Asym => "asym",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungOp {
    pub label: YoungLabel,
    pub value: Multivector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub label: YoungLabel,
    pub vectors: Vec<Multivector>,
}

impl IdealBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorSpace {
    pub label: YoungLabel,
    pub vectors: Vec<Multivector>,
    pub u: Multivector,
}

const SYM: &str = "(q^2*1 + q*(e13 + e24) - e1234)/(q^2+q+1)";
const MIXED12: &str = "(q*1 + e13 - q*(q+1)*e24 + (q+1)*e1234)/((q+1)*(q^2+q+1))";
const ASYM: &str = "((1-q)*1 - e13 - e24 + l*e14 + (q/l)*e23 - e1234)/(q^2+q+1)";
/// The 13|2 operator as printed, including its repeated `e13` term.
const MIXED13_PRINTED: &str = "(q*(2*q+1)*1 - q^2*e13 + (q+1)*e24 - l*(q+1)*e14 - q^2*e13 \
     + (q+1)*e1234)/((q+1)*(q^2+q+1))";

fn literal(ctx: &HeckeContext, text: &str) -> Result<Multivector> {
    ctx.fix(Multivector::parse(text, 4)?)
}

/// The four operators in the order sym, 12|3, 13|2, asym. The 13|2 operator
/// is the complement `1 - Ysym - Y12_3 - Yasym`.
pub fn young_operators(ctx: &HeckeContext) -> Result<Vec<YoungOp>> {
    ctx.require_n(2)?;
    let sym = literal(ctx, SYM)?;
    let m12 = literal(ctx, MIXED12)?;
    let asym = literal(ctx, ASYM)?;
    let m13 = &(&(&ctx.alg().one() - &sym) - &m12) - &asym;
    Ok(vec![
        YoungOp { label: YoungLabel::Sym, value: sym },
        YoungOp { label: YoungLabel::Mixed12, value: m12 },
        YoungOp { label: YoungLabel::Mixed13, value: m13 },
        YoungOp { label: YoungLabel::Asym, value: asym },
    ])
}

/// Check every coefficient of the symbolic Young operators against the
/// guards at `point`, before anything is specialized.
pub fn check_guards(point: &Point) -> Result<()> {
    for text in [SYM, MIXED12, ASYM] {
        for (_, c) in Multivector::parse(text, 4)?.terms() {
            c.check_guards(point)?;
        }
    }
    Ok(())
}

/// The printed 13|2 operator and `printed - derived`.
pub fn printed_mixed13(ctx: &HeckeContext, ops: &[YoungOp]) -> Result<(Multivector, Multivector)> {
    let printed = literal(ctx, MIXED13_PRINTED)?;
    let derived = op(ops, YoungLabel::Mixed13)?;
    let diff = &printed - &derived.value;
    Ok((printed, diff))
}

pub fn op(ops: &[YoungOp], label: YoungLabel) -> Result<&YoungOp> {
    ops.iter().find(|o| o.label == label).ok_or_else(|| Error::InvalidArgument(format!("no Young operator {label}")))
}

/// `Y_l Y_k = d_lk Y_k` for all ordered pairs, and the sum is `1`.
pub fn verify_young(ctx: &HeckeContext, ops: &[YoungOp]) -> Result<RelationReport> {
    let mut out = Vec::new();
    for a in ops {
        for b in ops {
            let prod = ctx.mul(&a.value, &b.value)?;
            let (want, rhs) = if a.label == b.label {
                (b.value.clone(), b.label.name().to_string())
            } else {
                (Multivector::zero(ctx.dim()), "0".to_string())
            };
            out.push(Relation::new(
                format!("young.product.{}.{}", a.label, b.label),
                format!("{}*{} = {rhs}", a.label.name(), b.label.name()),
                &prod - &want,
            ));
        }
    }
    let sum = ops.iter().fold(Multivector::zero(ctx.dim()), |acc, o| &acc + &o.value);
    out.push(Relation::new("young.complete", "Ysym + Y12_3 + Y13_2 + Yasym = 1", &sum - &ctx.alg().one()));
    Ok(out)
}

/// Left ideal generated by `y` under the Hecke algebra. Candidates are taken
/// in the order `y, b2 y, b1 y, b1 b2 y, b2 b1 y, b1 b2 b1 y` and the first
/// independent ones are kept, so a two-dimensional ideal comes out as
/// `{y, b2 y}`.
pub fn left_ideal(ctx: &HeckeContext, y: &YoungOp) -> Result<IdealBasis> {
    ctx.require_n(2)?;
    let words: [&[usize]; 6] = [&[], &[2], &[1], &[1, 2], &[2, 1], &[1, 2, 1]];
    let mut cands = Vec::with_capacity(words.len());
    for w in words {
        cands.push(ctx.mul(&ctx.word(w)?, &y.value)?);
    }
    let pivots = exactla::coordinate_matrix(&cands, ctx.dim()).pivot_columns();
    let vectors = pivots.into_iter().map(|j| cands[j].clone()).collect();
    Ok(IdealBasis { label: y.label, vectors })
}

/// The scalar by which `C3` acts on an ideal.
pub fn class_sum_eigenvalue(ctx: &HeckeContext, ideal: &IdealBasis) -> Result<RatFunc> {
    let c3 = ctx.class_sum()?;
    let m = exactla::left_mult_matrix(ctx.alg(), &c3, &ideal.vectors, Some(&ideal.vectors))?;
    m.as_scalar().ok_or_else(|| Error::NonScalar(format!("C3 on the {} ideal:\n{m}", ideal.label)))
}

/// The four ideals of the left regular representation, checked to be
/// independent with total dimension 6 and stable under `b1`, `b2`.
pub fn regular_decomposition(ctx: &HeckeContext, ops: &[YoungOp]) -> Result<Vec<IdealBasis>> {
    let ideals = ops.iter().map(|y| left_ideal(ctx, y)).collect::<Result<Vec<_>>>()?;
    let all: Vec<Multivector> = ideals.iter().flat_map(|i| i.vectors.clone()).collect();
    let r = exactla::span_rank(&all);
    if r != 6 || all.len() != 6 {
        return Err(Error::InvalidArgument(format!(
            "regular representation has {} vectors of rank {r}, expected 6",
            all.len()
        )));
    }
    for ideal in &ideals {
        for b in ctx.generators() {
            exactla::left_mult_matrix(ctx.alg(), b, &ideal.vectors, Some(&ideal.vectors))?;
        }
    }
    Ok(ideals)
}

/// Matrix of `a` acting on an ideal basis by left multiplication.
pub fn ideal_matrix(ctx: &HeckeContext, a: &Multivector, ideal: &IdealBasis) -> Result<Matrix> {
    exactla::left_mult_matrix(ctx.alg(), a, &ideal.vectors, Some(&ideal.vectors))
}

/// `e12 v = 0` and `e34 v = 0` for every ideal basis vector `v`, plus the
/// control `e13 Ysym = Ysym`.
pub fn annihilator_check(ctx: &HeckeContext, ideals: &[IdealBasis]) -> Result<RelationReport> {
    let mut out = Vec::new();
    for (name, blade) in [("e12", [1, 2]), ("e34", [3, 4])] {
        let e = ctx.alg().basis(&blade);
        for ideal in ideals {
            for (k, v) in ideal.vectors.iter().enumerate() {
                let vname = if k == 0 { ideal.label.name().to_string() } else { format!("b2*{}", ideal.label.name()) };
                out.push(Relation::new(
                    format!("young.annihilate.{name}.{}.{k}", ideal.label),
                    format!("{name}*{vname} = 0"),
                    ctx.mul(&e, v)?,
                ));
            }
        }
    }
    Ok(out)
}

/// `u = e1 + e3`.
pub fn odd_element(ctx: &HeckeContext) -> Multivector {
    &ctx.alg().vector(1) + &ctx.alg().vector(3)
}

/// `{Y, b2 Y, u Y, u b2 Y}` with the odd element `u` on the left.
pub fn spinor_space(ctx: &HeckeContext, y: &YoungOp) -> Result<SpinorSpace> {
    let u = odd_element(ctx);
    let y0 = y.value.clone();
    let y1 = ctx.mul(&ctx.generator(2)?, &y0)?;
    let vectors = vec![ctx.mul(&u, &y0)?, ctx.mul(&u, &y1)?];
    let vectors = [vec![y0, y1], vectors].concat();
    Ok(SpinorSpace { label: y.label, vectors, u })
}

/// `{Y, b2 Y, Y u, b2 Y u}` with `u` on the right, as the sum is displayed.
pub fn spinor_space_right(ctx: &HeckeContext, y: &YoungOp) -> Result<SpinorSpace> {
    let u = odd_element(ctx);
    let y0 = y.value.clone();
    let y1 = ctx.mul(&ctx.generator(2)?, &y0)?;
    let vectors = vec![ctx.mul(&y0, &u)?, ctx.mul(&y1, &u)?];
    let vectors = [vec![y0, y1], vectors].concat();
    Ok(SpinorSpace { label: y.label, vectors, u })
}

/// For each even blade, the matrix of its left action on `basis`. Fails if
/// the span is not closed.
pub fn even_action(ctx: &HeckeContext, basis: &[Multivector]) -> Result<Vec<(Blade, Matrix)>> {
    Blade::all(ctx.dim())
        .into_iter()
        .filter(|b| b.is_even())
        .map(|b| {
            let e = Multivector::blade(ctx.dim(), b);
            Ok((b, exactla::left_mult_matrix(ctx.alg(), &e, basis, Some(basis))?))
        })
        .collect()
}

/// Rank of the map from the even subalgebra to operators on `basis`.
pub fn faithfulness_rank(action: &[(Blade, Matrix)]) -> Result<usize> {
    let cols = action.iter().map(|(_, m)| (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()).collect();
    Ok(Matrix::from_columns(cols)?.rank())
}
