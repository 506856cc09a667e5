//! Worked examples across the modules, checked end to end.

use qclifford::clifford::{Algebra, BilinearForm};
use qclifford::coeff::{int, ratio, Guard, Point, RatFunc};
use qclifford::exactla::{self, Matrix};
use qclifford::exterior::{Blade, Multivector};
use qclifford::hecke::{HeckeContext, Sign};
use qclifford::versor::{self, Eps, VersorWord};
use qclifford::young::{self, YoungLabel};
use qclifford::Error;

fn rf(t: &str) -> RatFunc {
    t.parse().unwrap()
}

fn mv(t: &str) -> Multivector {
    Multivector::parse(t, 4).unwrap()
}

#[test]
fn field_arithmetic() {
    assert_eq!(rf("(s^2 + s)/(s + 1)"), rf("s"));
    assert_eq!(&rf("q") * &rf("1/q"), RatFunc::one());
    assert_eq!(&(&RatFunc::one() - &rf("q")) + &rf("q"), RatFunc::one());
    assert_eq!(rf("q").checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
}

#[test]
fn normal_forms() {
    let p = |t: &str| rf(t).numer().clone();
    assert_eq!(RatFunc::normalize(p("s^4-1"), p("s^2-1")).unwrap(), rf("s^2+1"));
    let z = RatFunc::normalize(p("0"), p("s+1")).unwrap();
    assert!(z.is_zero() && z.denom().is_one());
    assert_eq!(RatFunc::normalize(p("2*s"), p("4")).unwrap().to_string(), "s/2");
    assert!(RatFunc::normalize(p("s"), p("0")).is_err());
}

#[test]
fn evaluation_and_guards() {
    let f = rf("1/(1+q)");
    assert_eq!(f.evaluate(&int(1), &int(1)).unwrap(), ratio(1, 2));
    let err = f.evaluate_at(&Point::parse("q=-1,l=1").unwrap()).unwrap_err();
    assert_eq!(err, Error::Guard(Guard::OnePlusQ));
    assert!(err.to_string().ends_with("1+q=0"));
    let one_minus_q = rf("1-q");
    assert_eq!(one_minus_q.evaluate(&int(1), &int(1)).unwrap(), int(0));
}

#[test]
fn exterior_examples() {
    let e = |i| Multivector::vector(4, i);
    assert_eq!(e(1).wedge(&e(3)).unwrap(), mv("e13"));
    assert_eq!(e(3).wedge(&e(1)).unwrap(), mv("-e13"));
    assert!(e(1).wedge(&e(1)).unwrap().is_zero());
    assert_eq!(mv("q + e13").grade_project(0), mv("q"));
    assert_eq!(mv("q + e13").grade_project(2), mv("e13"));
    assert_eq!(mv("(1-q) - e13").grade_project(2), mv("-e13"));
    assert_eq!(e(1).grade_involute(), mv("-e1"));
    assert_eq!(mv("e13").grade_involute(), mv("e13"));
    assert_eq!(mv("1 + e1 + e13").grade_involute(), mv("1 - e1 + e13"));
}

#[test]
fn bilinear_form_rows() {
    let rows = |n| BilinearForm::build(n).rows();
    let want = |t: &[&[&str]]| -> Vec<Vec<RatFunc>> { t.iter().map(|r| r.iter().map(|x| rf(x)).collect()).collect() };
    assert_eq!(
        rows(2),
        want(&[&["0", "0", "q", "0"], &["0", "0", "0", "q"], &["1", "l", "0", "0"], &["q/l", "1", "0", "0"]])
    );
    assert_eq!(rows(1), want(&[&["0", "q"], &["1", "0"]]));
}

#[test]
fn clifford_examples() {
    let alg = Algebra::build(2);
    let e = |i| alg.vector(i);
    assert_eq!(alg.contract(&e(1), &e(3)).unwrap(), mv("q"));
    assert_eq!(alg.contract(&e(1), &mv("e34")).unwrap(), mv("q*e4"));
    assert_eq!(alg.mul(&e(1), &e(3)).unwrap(), mv("q + e13"));
    assert_eq!(alg.mul(&e(3), &e(1)).unwrap(), mv("1 - e13"));
    let u = &e(1) + &e(3);
    assert_eq!(alg.mul(&u, &u).unwrap(), mv("1 + q"));
    assert_eq!(alg.reversion(&mv("e13")).unwrap(), mv("(1-q) - e13"));
    assert_eq!(alg.reversion(&e(1)).unwrap(), e(1));
    assert_eq!(alg.reversion(&mv("q")).unwrap(), mv("q"));
    assert!(alg.clifford_map_square(&e(1)).unwrap().is_zero());
    assert_eq!(alg.clifford_map_square(&u).unwrap(), rf("1+q"));
    assert_eq!(alg.clifford_map_square(&(&e(2) + &e(4))).unwrap(), rf("1+q"));
}

#[test]
fn exactla_examples() {
    assert_eq!(Matrix::identity(4).rank(), 4);
    let m = Matrix::from_rows(vec![vec![rf("1"), rf("q")], vec![rf("l"), rf("q*l")]]).unwrap();
    assert_eq!(m.rank(), 1);
    assert!(Matrix::identity(3).nullspace().is_empty());
    assert_eq!(Matrix::zeros(2, 3).nullspace().len(), 3);
    let k = Matrix::from_rows(vec![vec![rf("1"), rf("q")]]).unwrap().nullspace();
    assert_eq!(k.len(), 1);
    assert_eq!(&k[0][0] * &rf("1"), &-&k[0][1] * &rf("q"));

    let ctx = HeckeContext::new(2).unwrap();
    let ops = young::young_operators(&ctx).unwrap();
    let ysym = young::op(&ops, YoungLabel::Sym).unwrap().value.clone();
    let yasym = young::op(&ops, YoungLabel::Asym).unwrap().value.clone();
    let images: Vec<Multivector> = ctx.hecke_basis().unwrap().iter().map(|a| ctx.mul(a, &ysym).unwrap()).collect();
    assert_eq!(exactla::span_rank(&images), 1);
    let b1 = ctx.generator(1).unwrap();
    let on = |y: &Multivector| {
        exactla::left_mult_matrix(ctx.alg(), &b1, std::slice::from_ref(y), Some(std::slice::from_ref(y))).unwrap()
    };
    assert_eq!(on(&ysym).get(0, 0), &RatFunc::one());
    assert_eq!(on(&yasym).get(0, 0), &rf("-q"));
    let blades: Vec<Multivector> = Blade::all(4).into_iter().map(|b| Multivector::blade(4, b)).collect();
    let one = exactla::left_mult_matrix(ctx.alg(), &ctx.alg().one(), &blades, None).unwrap();
    assert_eq!(one, Matrix::identity(16));
}

#[test]
fn hecke_examples() {
    assert_eq!(HeckeContext::new(2).unwrap().generator(1).unwrap(), mv("e13"));
    assert_eq!(HeckeContext::new(2).unwrap().generator(2).unwrap(), mv("e24"));
    let c3 = HeckeContext::new(3).unwrap();
    assert_eq!(c3.generator(3).unwrap(), Multivector::parse("e36", 6).unwrap());
    for n in [2, 3] {
        let rels = HeckeContext::new(n).unwrap().verify_relations().unwrap();
        assert!(rels.iter().all(|r| r.holds()), "n={n}");
    }
    assert!(c3.verify_relations().unwrap().iter().any(|r| r.id == "hecke.commute.b1.b3"));

    let ctx = HeckeContext::new(2).unwrap();
    let g = ctx.symmetrized();
    let braid = g.verify_relations().unwrap().into_iter().find(|r| r.id.contains("braid")).unwrap();
    assert!(!braid.holds());

    let p = ctx.projector(1, Sign::Plus).unwrap();
    let m = ctx.projector(1, Sign::Minus).unwrap();
    assert_eq!(&p + &m, ctx.alg().one());
    assert!(ctx.mul(&p, &m).unwrap().is_zero());
    let p2 = ctx.projector(2, Sign::Plus).unwrap();
    assert!(!ctx.alg().commutator(&p, &p2).unwrap().is_zero());

    let basis = ctx.hecke_basis().unwrap();
    assert_eq!(basis.len(), 6);
    assert_eq!(exactla::span_rank(&basis), 6);
    let c = ctx.class_sum().unwrap();
    for i in 1..=2 {
        assert!(ctx.alg().commutator(&c, &ctx.generator(i).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn young_examples() {
    let ctx = HeckeContext::new(2).unwrap();
    let ops = young::young_operators(&ctx).unwrap();
    let y = |l| young::op(&ops, l).unwrap().value.clone();
    let c = ctx.class_sum().unwrap();
    assert_eq!(ctx.mul(&c, &y(YoungLabel::Sym)).unwrap(), y(YoungLabel::Sym).scale(&rf("2 + 1/q")));
    assert_eq!(ctx.mul(&c, &y(YoungLabel::Asym)).unwrap(), y(YoungLabel::Asym).scale(&rf("-2*q - q^2")));
    assert_eq!(ctx.mul(&y(YoungLabel::Sym), &y(YoungLabel::Sym)).unwrap(), y(YoungLabel::Sym));
    assert!(ctx.mul(&y(YoungLabel::Sym), &y(YoungLabel::Asym)).unwrap().is_zero());
    assert_eq!(ctx.mul(&y(YoungLabel::Mixed12), &y(YoungLabel::Mixed12)).unwrap(), y(YoungLabel::Mixed12));
    let total = ops.iter().fold(Multivector::zero(4), |acc, o| &acc + &o.value);
    assert_eq!(total, ctx.alg().one());

    let at1 = HeckeContext::at(2, &Point::parse("q=1,l=1").unwrap()).unwrap();
    let ops1 = young::young_operators(&at1).unwrap();
    let want = Multivector::parse("(1 + e13 + e24 - e1234)/3", 4).unwrap();
    assert_eq!(young::op(&ops1, YoungLabel::Sym).unwrap().value, want);

    let ideals = young::regular_decomposition(&ctx, &ops).unwrap();
    let dims: Vec<usize> = ideals.iter().map(|i| i.dim()).collect();
    assert_eq!(dims, [1, 2, 2, 1]);
    let eig: Vec<RatFunc> = ideals.iter().map(|i| young::class_sum_eigenvalue(&ctx, i).unwrap()).collect();
    assert_eq!(eig[1], eig[2]);
    assert_eq!(eig[1].evaluate(&int(1), &int(1)).unwrap(), int(0));

    let e = |i: &[usize]| ctx.alg().basis(i);
    assert!(ctx.mul(&e(&[1, 2]), &y(YoungLabel::Sym)).unwrap().is_zero());
    let b2y = ctx.mul(&ctx.generator(2).unwrap(), &y(YoungLabel::Mixed13)).unwrap();
    assert!(ctx.mul(&e(&[3, 4]), &b2y).unwrap().is_zero());
    assert_eq!(ctx.mul(&e(&[1, 3]), &y(YoungLabel::Sym)).unwrap(), y(YoungLabel::Sym));

    let u = young::odd_element(&ctx);
    assert_eq!(ctx.mul(&u, &u).unwrap(), mv("1 + q"));
    for label in [YoungLabel::Mixed12, YoungLabel::Mixed13] {
        let s = young::spinor_space(&ctx, young::op(&ops, label).unwrap()).unwrap();
        assert_eq!(exactla::span_rank(&s.vectors), 4);
        let action = young::even_action(&ctx, &s.vectors).unwrap();
        assert_eq!(young::faithfulness_rank(&action).unwrap(), 8);
        assert!(action.iter().filter(|(b, _)| b.grade() == 2).all(|(_, m)| !m.is_zero()));
    }
}

#[test]
fn versor_examples() {
    let ctx = HeckeContext::new(2).unwrap();
    let w = |l: &[usize]| VersorWord::new(l, Eps::Minus);
    assert_eq!(versor::adjoint(&ctx, &w(&[1])).unwrap(), mv("(q-1) + e13"));
    assert_eq!(versor::adjoint(&ctx, &w(&[])).unwrap(), ctx.alg().one());
    let b1 = ctx.generator(1).unwrap();
    let b2 = ctx.generator(2).unwrap();
    let rev12 = ctx.alg().reversion(&ctx.mul(&b1, &b2).unwrap()).unwrap();
    let revs = ctx.mul(&ctx.alg().reversion(&b2).unwrap(), &ctx.alg().reversion(&b1).unwrap()).unwrap();
    assert_eq!(versor::adjoint(&ctx, &w(&[1, 2])).unwrap(), rev12);
    assert_eq!(rev12, revs);

    let p = ctx.projector(1, Sign::Plus).unwrap();
    let m = ctx.projector(1, Sign::Minus).unwrap();
    assert_eq!(versor::alpha_eps_linear(&ctx, &p, Eps::Plus).unwrap(), m);
    assert_eq!(versor::alpha_eps_linear(&ctx, &p, Eps::Minus).unwrap(), -&m);
    assert_eq!(versor::alpha_eps_linear(&ctx, &b1, Eps::Minus).unwrap(), mv("(q-1) + e13"));

    let bar = versor::bar_generator(&ctx, 1, Eps::Minus).unwrap();
    assert_eq!(ctx.mul(&b1, &bar).unwrap(), mv("q"));
    let inv = versor::generator_inverse(&ctx, 1).unwrap();
    assert_eq!(ctx.mul(&b1, &inv).unwrap(), ctx.alg().one());

    assert_eq!(versor::phi(&ctx, &w(&[1]), &w(&[1])).unwrap(), mv("q"));
    let n1 = versor::normalize_word(&w(&[1])).unwrap();
    assert_eq!(n1.c, rf("1/s"));
    assert_eq!(versor::phi(&ctx, &n1, &n1).unwrap(), ctx.alg().one());
    assert_eq!(versor::phi(&ctx, &w(&[]), &w(&[])).unwrap(), ctx.alg().one());
    assert_eq!(versor::normalize_word(&w(&[1, 2])).unwrap().c, rf("1/q"));
    assert_eq!(versor::normalize_word(&w(&[])).unwrap().c, RatFunc::one());
    let n121 = versor::normalize_word(&w(&[1, 2, 1])).unwrap();
    assert!(versor::gamma_membership(&ctx, &n121).unwrap().member);
    let raw = versor::gamma_membership(&ctx, &w(&[1])).unwrap();
    assert!(!raw.member);
    assert_eq!(raw.phi, mv("q"));

    assert_eq!(versor::conjugate(&ctx, &w(&[1]), &b1).unwrap(), b1);
    assert_eq!(versor::conjugate(&ctx, &w(&[1]), &ctx.alg().one()).unwrap(), ctx.alg().one());
    let at1 = HeckeContext::at(2, &Point::parse("q=1,l=1").unwrap()).unwrap();
    let got = versor::conjugate(&at1, &w(&[1]), &at1.generator(2).unwrap()).unwrap();
    assert_eq!(got, at1.word(&[1, 2, 1]).unwrap());
    for word in VersorWord::enumerate(2, 4, Eps::Minus) {
        let nw = versor::normalize_word(&word).unwrap();
        assert_eq!(versor::phi(&at1, &nw, &nw).unwrap(), at1.alg().one(), "{nw}");
    }
}

#[test]
fn versor_word_text_round_trip() {
    for eps in Eps::BOTH {
        for w in VersorWord::enumerate(2, 4, eps) {
            let n = versor::normalize_word(&w).map(|n| n.to_string()).unwrap_or_else(|_| w.to_string());
            let back: VersorWord = n.parse().unwrap();
            assert_eq!(back.to_string(), n);
        }
    }
    assert_eq!(VersorWord::new(&[1, 2, 1], Eps::Minus).to_string(), "1 * b1.b2.b1 [eps=-1]");
}
