use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Monomial, Multivector, Poly, RatFunc, Scalar};
use proptest::prelude::*;

fn registry() -> Arc<GeneratorRegistry> {
    GeneratorRegistry::builder().coordinates(&["u", "v", "w"]).abstract_odd("e1").build()
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| Scalar::gaussian((a, b), (c, d)))
}

fn poly(nvars: u16) -> impl Strategy<Value = Poly> {
    prop::collection::vec((scalar(), prop::collection::vec(0u32..=2, nvars as usize)), 0..4).prop_map(|terms| {
        let mut p = Poly::zero();
        for (c, exps) in terms {
            let m = Monomial::from_pairs(exps.into_iter().enumerate().map(|(v, e)| (v as u16, e)).collect());
            p.add_term(m, c);
        }
        p
    })
}

/// Random multivector with at most 5 terms of odd degree at most 4.
fn multivector() -> impl Strategy<Value = Multivector> {
    let reg = registry();
    let nodd = reg.odd_gens().len();
    let nvars = reg.even_vars().len() as u16;
    prop::collection::vec((poly(nvars), prop::collection::vec(0..nodd as u16, 0..=4)), 0..=5).prop_map(move |raw| {
        let raw = raw.into_iter().map(|(p, seq)| (RatFunc::from_poly(p), seq)).collect();
        Multivector::normalize(&reg, raw)
    })
}

fn homogeneous_parts(m: &Multivector) -> Vec<(usize, Multivector)> {
    (0..=8).map(|k| (k, m.degree_part(k))).filter(|(_, p)| !p.is_zero()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), Scalar::one());
        }
    }

    #[test]
    fn multiply_associative_and_unital(a in multivector(), b in multivector(), c in multivector()) {
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let one = Multivector::one(a.registry());
        prop_assert_eq!(a.multiply(&one).unwrap(), a.clone());
    }

    #[test]
    fn graded_commutativity(a in multivector(), b in multivector()) {
        for (p, ap) in homogeneous_parts(&a) {
            for (q, bq) in homogeneous_parts(&b) {
                let lhs = ap.multiply(&bq).unwrap();
                let rhs = bq.multiply(&ap).unwrap();
                let rhs = if (p * q) % 2 == 1 { rhs.neg() } else { rhs };
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn odd_derivation_squares_to_zero(a in multivector()) {
        for g in 0..a.registry().odd_gens().len() as u16 {
            prop_assert!(a.odd_derivation(g).odd_derivation(g).is_zero());
        }
    }

    #[test]
    fn odd_derivation_leibniz(a in multivector(), b in multivector()) {
        let g = 0u16;
        for (p, ap) in homogeneous_parts(&a) {
            let lhs = ap.multiply(&b).unwrap().odd_derivation(g);
            let t = ap.multiply(&b.odd_derivation(g)).unwrap();
            let rhs = ap.odd_derivation(g).multiply(&b).unwrap().add(&if p % 2 == 1 { t.neg() } else { t });
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn even_and_odd_derivatives_commute(a in multivector(), x in 0u16..6, g in 0u16..10) {
        prop_assert_eq!(a.even_derivative(x).odd_derivation(g), a.odd_derivation(g).even_derivative(x));
    }

    #[test]
    fn even_derivative_leibniz(a in multivector(), b in multivector(), x in 0u16..6) {
        let lhs = a.multiply(&b).unwrap().even_derivative(x);
        let rhs = a.even_derivative(x).multiply(&b).unwrap().add(&a.multiply(&b.even_derivative(x)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalize_is_idempotent(a in multivector()) {
        let raw = a.terms().map(|(m, c)| (c.clone(), m.clone())).collect();
        prop_assert_eq!(Multivector::normalize(a.registry(), raw), a);
    }
}

#[test]
fn quotient_rule_example() {
    // d/dv~ ( v~ / (v v~ + w1 w1~) ) = w1 w1~ / (v v~ + w1 w1~)^2
    let reg = GeneratorRegistry::builder().coordinates(&["v", "w1"]).build();
    let var = |n: &str| Poly::var(reg.var(n).unwrap());
    let den = var("v").mul(&var("v~")).add(&var("w1").mul(&var("w1~")));
    let f = Multivector::scalar(&reg, RatFunc::from_fraction(var("v~"), &den));
    let got = f.even_derivative(reg.var("v~").unwrap());
    let expected = RatFunc::from_fraction(var("w1").mul(&var("w1~")), &den.mul(&den));
    assert_eq!(got, Multivector::scalar(&reg, expected.clone()));
    // Oracle: clearing the denominator gives the numerator identity.
    let cleared = got.coefficient(&[]).mul_poly(&den.mul(&den));
    assert_eq!(cleared, RatFunc::from_poly(var("w1").mul(&var("w1~"))));
}

#[test]
fn multiply_examples() {
    let reg = GeneratorRegistry::builder().coordinates(&["u", "v", "w1"]).build();
    let v = |n: &str| Multivector::var(&reg, reg.var(n).unwrap());
    let th = |n: &str| Multivector::odd(&reg, reg.theta(reg.var(n).unwrap()).unwrap());
    let uv = v("u").wedge(&th("u")).multiply(&v("v").wedge(&th("v"))).unwrap();
    assert_eq!(uv.to_text(), "u*v*Du^Dv");
    assert!(th("u").multiply(&th("u")).unwrap().is_zero());
    let b = th("u").wedge(&th("v"));
    assert_eq!(b.multiply(&v("w1")).unwrap(), v("w1").multiply(&b).unwrap());
}

#[test]
fn registry_mismatch_is_an_error() {
    let a = Multivector::one(&registry());
    let b = Multivector::one(&GeneratorRegistry::builder().coordinates(&["x"]).build());
    assert!(a.multiply(&b).is_err());
}
