//! Independent reimplementations checked against the library.

use proptest::prelude::*;
use qclifford::clifford::Algebra;
use qclifford::coeff::{int, Poly, RatFunc, Rational};
use qclifford::exactla::Matrix;
use qclifford::exterior::{Blade, Multivector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly(terms: &[(usize, usize, i64)]) -> Poly {
    Poly::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), int(c))))
}

fn random_ratfunc(rng: &mut ChaCha8Rng, with_den: bool) -> RatFunc {
    let pick = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(1..=3);
        let terms: Vec<_> = (0..k).map(|_| (rng.gen_range(0..3), rng.gen_range(0..2), rng.gen_range(-3..=3))).collect();
        poly(&terms)
    };
    let num = pick(rng);
    if !with_den {
        return RatFunc::from_poly(num);
    }
    let mut den = pick(rng);
    while den.is_zero() {
        den = pick(rng);
    }
    RatFunc::normalize(num, den).unwrap()
}

/// Plain forward elimination over the field, with any nonzero pivot.
fn naive_rank(rows: &[Vec<RatFunc>]) -> usize {
    let mut m: Vec<Vec<RatFunc>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].checked_div(&m[rank][c]).unwrap();
            for k in c..cols {
                m[r][k] = &m[r][k] - &(&f * &m[rank][k]);
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn rank_matches_naive_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..50 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let mut rows: Vec<Vec<RatFunc>> =
            (0..r).map(|_| (0..c).map(|_| random_ratfunc(&mut rng, trial % 2 == 0)).collect()).collect();
        // Force dependencies in about half the cases.
        if r > 1 && rng.gen_bool(0.5) {
            let f = random_ratfunc(&mut rng, false);
            let g = random_ratfunc(&mut rng, false);
            rows[r - 1] = (0..c).map(|k| &(&f * &rows[0][k]) + &(&g * &rows[r - 2][k])).collect();
        }
        let want = naive_rank(&rows);
        let got = Matrix::from_rows(rows.clone()).unwrap().rank();
        assert_eq!(got, want, "trial {trial}: {rows:?}");
    }
}

/// `x _| e_T = sum_m (-1)^(m-1) B(x, e_tm) e_(T without tm)`, expanded
/// directly for a vector `x = e_i`.
fn contract_vector_oracle(alg: &Algebra, i: usize, t: Blade) -> Multivector {
    let dim = alg.dim();
    let mut out = Multivector::zero(dim);
    for (m, tm) in t.indices().enumerate() {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let c = alg.form().get(i, tm).clone();
        if c.is_zero() {
            continue;
        }
        let rest = Multivector::blade(dim, t.without(tm)).scale(&(&RatFunc::integer(sign) * &c));
        out = &out + &rest;
    }
    out
}

#[test]
fn contraction_matches_expansion() {
    for n in [1, 2] {
        let alg = Algebra::build(n);
        let dim = alg.dim();
        for i in 1..=dim {
            for t in Blade::all(dim) {
                let got = alg.contract(&alg.vector(i), &Multivector::blade(dim, t)).unwrap();
                assert_eq!(got, contract_vector_oracle(&alg, i, t), "e{i} _| {}", t.render(dim));
            }
        }
        // Bivector left factors by nesting the vector oracle.
        for i in 1..=dim {
            for j in i + 1..=dim {
                for t in Blade::all(dim) {
                    let inner = contract_vector_oracle(&alg, j, t);
                    let mut want = Multivector::zero(dim);
                    for (b, c) in inner.terms() {
                        want = &want + &contract_vector_oracle(&alg, i, *b).scale(c);
                    }
                    let eij = alg.basis(&[i, j]);
                    let got = alg.contract(&eij, &Multivector::blade(dim, t)).unwrap();
                    assert_eq!(got, want, "e{i}{j} _| {}", t.render(dim));
                }
            }
        }
    }
}

#[test]
fn spec_contraction_via_rule_iii() {
    let alg = Algebra::build(2);
    let e13 = alg.basis(&[1, 3]);
    let e34 = alg.basis(&[3, 4]);
    let nested = alg.contract(&alg.vector(1), &alg.contract(&alg.vector(3), &e34).unwrap()).unwrap();
    assert_eq!(alg.contract(&e13, &e34).unwrap(), nested);
}

#[test]
fn vector_product_is_contraction_plus_wedge() {
    let alg = Algebra::build(2);
    for i in 1..=4 {
        let x = alg.vector(i);
        for t in Blade::all(4) {
            let u = Multivector::blade(4, t);
            let want = &alg.contract(&x, &u).unwrap() + &x.wedge(&u).unwrap();
            assert_eq!(alg.mul(&x, &u).unwrap(), want);
        }
    }
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    let term = (0usize..3, 0usize..2, -4i64..=4);
    (prop::collection::vec(term.clone(), 1..4), prop::collection::vec(term, 1..3)).prop_filter_map(
        "nonzero denominator",
        |(n, d)| {
            let den = poly(&d);
            (!den.is_zero()).then(|| RatFunc::normalize(poly(&n), den).unwrap())
        },
    )
}

fn arb_poly() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((0usize..3, 0usize..2, -4i64..=4), 1..3).prop_map(|t| RatFunc::from_poly(poly(&t)))
}

fn arb_multivector(dim: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u32..(1 << dim), arb_ratfunc()), 0..4)
        .prop_map(move |ts| Multivector::from_terms(dim, ts.into_iter().map(|(b, c)| (Blade(b), c))))
}

/// Polynomial coefficients keep the products cheap.
fn arb_poly_multivector(dim: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u32..(1 << dim), arb_poly()), 0..4)
        .prop_map(move |ts| Multivector::from_terms(dim, ts.into_iter().map(|(b, c)| (Blade(b), c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in arb_ratfunc(), k in arb_ratfunc()) {
        prop_assume!(!k.is_zero());
        let scaled = RatFunc::normalize(
            a.numer() * k.numer(),
            a.denom() * k.numer(),
        );
        prop_assert_eq!(scaled.unwrap(), a.clone());
        prop_assert_eq!(RatFunc::normalize(a.numer().clone(), a.denom().clone()).unwrap(), a);
    }

    #[test]
    fn ratfunc_text_round_trip(a in arb_ratfunc()) {
        let back: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn multivector_text_round_trip(m in arb_multivector(4)) {
        prop_assert_eq!(Multivector::parse(&m.to_string(), 4).unwrap(), m);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_ratfunc(), b in arb_ratfunc(), s in 2i64..7, l in 1i64..5) {
        let (s, l) = (Rational::from_integer(s.into()), Rational::from_integer(l.into()));
        if let (Ok(x), Ok(y)) = (a.evaluate(&s, &l), b.evaluate(&s, &l)) {
            prop_assert_eq!((&a + &b).evaluate(&s, &l).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).evaluate(&s, &l).unwrap(), &x * &y);
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_is_associative(x in arb_poly_multivector(4), y in arb_poly_multivector(4), z in arb_poly_multivector(4)) {
        let alg = Algebra::build(2);
        let left = alg.mul(&alg.mul(&x, &y).unwrap(), &z).unwrap();
        let right = alg.mul(&x, &alg.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reversion_reverses_products(x in arb_poly_multivector(4), y in arb_poly_multivector(4)) {
        let alg = Algebra::build(2);
        let lhs = alg.reversion(&alg.mul(&x, &y).unwrap()).unwrap();
        let rhs = alg.mul(&alg.reversion(&y).unwrap(), &alg.reversion(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
