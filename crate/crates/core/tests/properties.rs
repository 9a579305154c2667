mod common;

use std::collections::BTreeMap;

use num_rational::BigRational;
use orbitcompat::groebner::{
    buchberger, dehomogenise, homogenise_ideal, ideal_contains, ideal_equal, normal_form, saturate, IdealPresentation,
};
use orbitcompat::intersect::TruncatedSeries;
use orbitcompat::polyalg::{parse_poly, Ctx, Monomial, MonomialOrder, MultiPoly, VarContext};
use proptest::prelude::*;

use common::{ideal, poly};

fn ctx3() -> Ctx {
    VarContext::new(&["x", "y", "z"]).unwrap()
}

/// Integer terms as `(exponents, coefficient)`.
fn int_terms() -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    prop::collection::vec(([0u32..4, 0u32..4, 0u32..4], -9i64..10), 0..6)
}

fn rat_terms() -> impl Strategy<Value = Vec<([u32; 3], i64, i64)>> {
    prop::collection::vec(([0u32..4, 0u32..4, 0u32..4], -9i64..10, 1i64..6), 0..6)
}

fn from_int_terms(ctx: &Ctx, terms: &[([u32; 3], i64)]) -> MultiPoly {
    MultiPoly::from_terms(
        ctx,
        terms.iter().map(|(e, c)| (Monomial::from_exponents(e.to_vec()), BigRational::from_integer((*c).into()))),
    )
}

fn from_rat_terms(ctx: &Ctx, terms: &[([u32; 3], i64, i64)]) -> MultiPoly {
    MultiPoly::from_terms(
        ctx,
        terms.iter().map(|(e, n, d)| (Monomial::from_exponents(e.to_vec()), BigRational::new((*n).into(), (*d).into()))),
    )
}

/// Product by plain `i128` convolution over exponent vectors.
fn int_product(a: &[([u32; 3], i64)], b: &[([u32; 3], i64)]) -> BTreeMap<[u32; 3], i128> {
    let mut out = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
            *out.entry(e).or_insert(0i128) += *ca as i128 * *cb as i128;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in rat_terms(), b in rat_terms(), c in rat_terms()) {
        let ctx = ctx3();
        let (a, b, c) = (from_rat_terms(&ctx, &a), from_rat_terms(&ctx, &b), from_rat_terms(&ctx, &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(&ctx), a.clone());
    }

    #[test]
    fn integer_coefficients_multiply_like_integers(a in int_terms(), b in int_terms()) {
        let ctx = ctx3();
        let prod = &from_int_terms(&ctx, &a) * &from_int_terms(&ctx, &b);
        let oracle = int_product(&a, &b);
        prop_assert_eq!(prod.num_terms(), oracle.len());
        for (e, c) in oracle {
            let got = prod.coefficient(&Monomial::from_exponents(e.to_vec()));
            prop_assert_eq!(got, BigRational::from_integer(c.into()));
        }
    }

    #[test]
    fn printing_round_trips(a in rat_terms()) {
        let ctx = ctx3();
        let f = from_rat_terms(&ctx, &a);
        let text = f.to_string();
        prop_assert_eq!(parse_poly(&text, &ctx).unwrap(), f.clone());
        for order in [MonomialOrder::Lex, MonomialOrder::Elimination(1)] {
            prop_assert_eq!(parse_poly(&f.to_string_with(order), &ctx).unwrap(), from_rat_terms(&ctx, &a));
        }
    }

    #[test]
    fn homogenisation_is_homogeneous_and_undone_by_t_one(a in rat_terms()) {
        let ctx = ctx3();
        let f = from_rat_terms(&ctx, &a);
        prop_assume!(!f.is_zero());
        let h = f.homogenise("t").unwrap();
        prop_assert!(h.is_homogeneous());
        prop_assert_eq!(h.degree(), f.degree());
        let back = h.specialize_and_drop("t", &BigRational::from_integer(1.into())).unwrap();
        prop_assert_eq!(back.to_string(), f.to_string());
        prop_assert_eq!(back.context().names(), f.context().names());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(a in rat_terms(), b in rat_terms(), s in -5i64..6) {
        let gb = buchberger(&ideal(&["x", "y", "z"], &["x^2 + y*z - 1", "x*y - z"]), MonomialOrder::Grevlex).unwrap();
        let ctx = gb.context().clone();
        let (f, g) = (from_rat_terms(&ctx, &a), from_rat_terms(&ctx, &b));
        let nf = normal_form(&f, &gb).unwrap();
        prop_assert_eq!(normal_form(&nf, &gb).unwrap(), nf.clone());
        let s = BigRational::from_integer(s.into());
        let lhs = normal_form(&(&f + &g.scale(&s)), &gb).unwrap();
        let rhs = &nf + &normal_form(&g, &gb).unwrap().scale(&s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_division_inverts_multiplication(a in prop::collection::vec(-20i64..21, 1..8), b in prop::collection::vec(-20i64..21, 1..8), b0 in 1i64..7) {
        let order = 6;
        let sa = TruncatedSeries::from_ints(order, &a);
        let mut bc = b.clone();
        bc[0] = b0;
        let sb = TruncatedSeries::from_ints(order, &bc);
        prop_assert_eq!(sa.mul(&sb).unwrap().div(&sb).unwrap(), sa.clone());
        prop_assert_eq!(sb.div(&sb).unwrap(), TruncatedSeries::one(order));
    }
}

#[test]
fn parser_corpus_round_trips() {
    let text = include_str!("corpus/polys.txt");
    let mut seen = 0;
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (vars, literal) = line.split_once('|').unwrap();
        let names: Vec<&str> = vars.split(',').map(str::trim).collect();
        let ctx = VarContext::new(&names).unwrap();
        let f = parse_poly(literal.trim(), &ctx).unwrap_or_else(|e| panic!("{literal}: {e}"));
        let printed = f.to_string();
        let again = parse_poly(&printed, &ctx).unwrap();
        assert_eq!(again, f, "{literal}");
        assert_eq!(again.to_string(), printed);
        seen += 1;
    }
    assert!(seen >= 30);
}

#[test]
fn saturation_contains_the_ideal_and_is_idempotent() {
    let cases: &[(&[&str], &[&str], &str)] = &[
        (&["x", "t"], &["t*x"], "t"),
        (&["x", "y", "z", "t"], &["x^2 + y*z - t^2"], "t"),
        (&["x", "y", "t"], &["t*x^2 - t*y", "t^2*y"], "t"),
        (&["x", "y"], &["x*y", "x^2"], "x"),
    ];
    for (names, gens, f) in cases {
        let i = ideal(names, gens);
        let f = poly(i.context(), f);
        let s = saturate(&i, &f).unwrap();
        assert!(ideal_contains(&s, &i, MonomialOrder::Grevlex).unwrap(), "{gens:?}");
        let s2 = saturate(&s, &f).unwrap();
        assert!(ideal_equal(&s, &s2, MonomialOrder::Grevlex).unwrap(), "{gens:?}");
    }
}

#[test]
fn dehomogenised_saturation_lands_in_the_ideal() {
    let cases: &[(&[&str], &[&str])] = &[
        (&["x", "y", "z"], &["x^2 + y*z - 1"]),
        (&["x", "y", "z"], &["x^2 + y*z - 1", "2*x"]),
        (&["x", "y"], &["x^2 - y", "x*y - 1"]),
        (&["a", "b"], &["a^3 - b", "a*b - a"]),
    ];
    for (names, gens) in cases {
        let i = ideal(names, gens);
        let h = homogenise_ideal(&i, "t").unwrap();
        let back = dehomogenise(&h, "t").unwrap();
        assert_eq!(back.context().names(), i.context().names());
        let back = IdealPresentation::new(i.context(), back.generators().iter().map(|g| g.embed_into(i.context()).unwrap()).collect()).unwrap();
        assert!(ideal_contains(&i, &back, MonomialOrder::Grevlex).unwrap(), "{gens:?}");
        assert!(ideal_equal(&i, &back, MonomialOrder::Grevlex).unwrap(), "{gens:?}");
        for g in h.generators() {
            assert!(g.is_homogeneous());
        }
    }
}

#[test]
fn every_order_yields_a_basis_of_the_same_ideal() {
    let i = ideal(&["x", "y", "z"], &["x^2 + y*z - 1", "x*y - z", "z^2 - x"]);
    let grevlex = buchberger(&i, MonomialOrder::Grevlex).unwrap().to_presentation();
    for order in [MonomialOrder::Lex, MonomialOrder::Elimination(1), MonomialOrder::Elimination(2)] {
        let gb = buchberger(&i, order).unwrap();
        assert!(ideal_equal(&gb.to_presentation(), &grevlex, MonomialOrder::Grevlex).unwrap(), "{order}");
        for g in i.generators() {
            assert!(normal_form(g, &gb).unwrap().is_zero(), "{order}");
        }
    }
}
