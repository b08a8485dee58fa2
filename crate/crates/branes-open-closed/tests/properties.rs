use std::sync::Arc;

use branes_open_closed::{super_commutator, BraneSpec, Letter, SuperDiffOp};
use graded_algebra::{GeneratorRegistry, Scalar};
use proptest::prelude::*;

fn letters(reg: &Arc<GeneratorRegistry>) -> Vec<Letter> {
    let z = reg.var("z").unwrap();
    let (e1, e2) = (reg.abstract_odd("e1").unwrap(), reg.abstract_odd("e2").unwrap());
    vec![Letter::Even(z), Letter::DEven(z), Letter::Odd(e1), Letter::Odd(e2), Letter::DOdd(e1), Letter::DOdd(e2)]
}

/// Up to three words of at most four letters in `z, e1, e2` and their derivations.
fn operator(reg: Arc<GeneratorRegistry>) -> impl Strategy<Value = SuperDiffOp> {
    let pool = letters(&reg);
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..pool.len(), 0..=4)), 1..=3).prop_map(move |terms| {
        terms.into_iter().fold(SuperDiffOp::zero(&reg), |acc, (c, idx)| {
            let w: Vec<Letter> = idx.into_iter().map(|i| pool[i]).collect();
            acc.add(&SuperDiffOp::word(&reg, Scalar::from_int(c), &w))
        })
    })
}

fn homogeneous(reg: Arc<GeneratorRegistry>) -> impl Strategy<Value = SuperDiffOp> {
    (operator(reg), 0usize..2).prop_map(|(a, p)| a.parity_part(p))
}

fn reg() -> Arc<GeneratorRegistry> {
    BraneSpec::d3().registry()
}

fn sign(a: &SuperDiffOp, b: &SuperDiffOp) -> Scalar {
    if a.parity().unwrap() * b.parity().unwrap() == 1 {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn composition_is_associative(a in operator(reg()), b in operator(reg()), c in operator(reg())) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn commutator_is_graded_antisymmetric(a in homogeneous(reg()), b in homogeneous(reg())) {
        let lhs = super_commutator(&a, &b);
        let rhs = super_commutator(&b, &a).scale(&sign(&a, &b)).neg();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_satisfies_jacobi(a in homogeneous(reg()), b in homogeneous(reg()), c in homogeneous(reg())) {
        // [a, [b, c]] = [[a, b], c] + (-1)^{|a||b|} [b, [a, c]]
        let lhs = super_commutator(&a, &super_commutator(&b, &c));
        let rhs = super_commutator(&super_commutator(&a, &b), &c)
            .add(&super_commutator(&b, &super_commutator(&a, &c)).scale(&sign(&a, &b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_a_module_structure(a in operator(reg()), b in operator(reg()), f in operator(reg())) {
        let r = reg();
        let f = f.apply(&SuperDiffOp::one(&r));
        prop_assert_eq!(a.apply(&b.apply(&f)), a.compose(&b).apply(&f));
    }
}
