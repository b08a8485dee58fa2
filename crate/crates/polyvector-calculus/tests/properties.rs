mod common;

use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Multivector, OddId, VarId};
use polyvector_calculus::*;
use proptest::prelude::*;

fn c3() -> (Arc<GeneratorRegistry>, CalabiYauOrdering) {
    let reg = GeneratorRegistry::builder().coordinates(&["u", "v", "w"]).build();
    let cy = CalabiYauOrdering::new(&reg, &["u", "v", "w"]).unwrap();
    (reg, cy)
}

fn c2() -> (Arc<GeneratorRegistry>, CalabiYauOrdering) {
    let reg = GeneratorRegistry::builder().coordinates(&["u", "v"]).build();
    let cy = CalabiYauOrdering::new(&reg, &["u", "v"]).unwrap();
    (reg, cy)
}

fn all_vars(reg: &GeneratorRegistry) -> Vec<VarId> {
    reg.even_vars().iter().map(|e| e.id).collect()
}

fn hol_vars(reg: &GeneratorRegistry) -> Vec<VarId> {
    reg.holomorphic_coords()
}

fn pv_and_dbar(reg: &GeneratorRegistry) -> Vec<OddId> {
    let mut pool = Vec::new();
    for z in reg.holomorphic_coords() {
        pool.push(reg.dbar_form(z).unwrap());
        pool.push(reg.theta(z).unwrap());
    }
    pool.sort();
    pool
}

fn thetas(reg: &GeneratorRegistry) -> Vec<OddId> {
    reg.holomorphic_coords().into_iter().map(|z| reg.theta(z).unwrap()).collect()
}

fn sign(k: usize) -> i32 {
    if k % 2 == 0 { 1 } else { -1 }
}

fn signed(m: Multivector, s: i32) -> Multivector {
    if s < 0 { m.neg() } else { m }
}

fn deg(m: &Multivector) -> usize {
    m.total_degree().unwrap_or(0)
}

fn mixed(reg: &Arc<GeneratorRegistry>) -> impl Strategy<Value = Multivector> {
    common::multivector(reg.clone(), all_vars(reg), pv_and_dbar(reg), None, 4)
}

fn homogeneous(reg: &Arc<GeneratorRegistry>, k: usize) -> impl Strategy<Value = Multivector> {
    common::multivector(reg.clone(), hol_vars(reg), thetas(reg), Some(k), 3)
}

fn triple() -> impl Strategy<Value = (usize, usize, usize)> {
    (0usize..=3, 0usize..=3, 0usize..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn divergence_squares_to_zero(m in mixed(&c3().0)) {
        let (_, cy) = c3();
        let m = m.with_registry(cy.registry());
        let d = divergence(&divergence(&m, &cy).unwrap(), &cy).unwrap();
        prop_assert!(d.is_zero());
    }

    #[test]
    fn dolbeault_squares_to_zero(m in mixed(&c3().0)) {
        let (reg, _) = c3();
        let m = m.with_registry(&reg);
        prop_assert!(dolbeault(&dolbeault(&m)).is_zero());
    }

    #[test]
    fn dolbeault_and_divergence_anticommute(m in mixed(&c3().0)) {
        let (_, cy) = c3();
        let m = m.with_registry(cy.registry());
        let a = divergence(&dolbeault(&m), &cy).unwrap();
        let b = dolbeault(&divergence(&m, &cy).unwrap());
        prop_assert!(a.add(&b).is_zero());
    }

    #[test]
    fn bracket_is_graded_symmetric((a, b) in pair()) {
        let (_, cy) = c3();
        let (i, j) = (deg(&a), deg(&b));
        let ab = sn_bracket(&a, &b, &cy).unwrap();
        let ba = sn_bracket(&b, &a, &cy).unwrap();
        prop_assert_eq!(ab, signed(ba, sign(i * j)));
    }

    #[test]
    fn bracket_jacobi((a, b, c) in triple_mv()) {
        // Gerstenhaber form for the shifted bracket (-1)^|x| [x, y].
        let (_, cy) = c3();
        let (i, j) = (deg(&a), deg(&b));
        let br = |x: &Multivector, y: &Multivector| signed(sn_bracket(x, y, &cy).unwrap(), sign(deg(x)));
        let lhs = br(&a, &br(&b, &c));
        let rhs = br(&br(&a, &b), &c).add(&signed(br(&b, &br(&a, &c)), sign((i + 1) * (j + 1))));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_leibniz((a, b, c) in triple_mv()) {
        let (_, cy) = c3();
        let (i, j) = (deg(&a), deg(&b));
        let br = |x: &Multivector, y: &Multivector| sn_bracket(x, y, &cy).unwrap();
        let lhs = br(&a, &b.wedge(&c));
        let rhs = br(&a, &b).wedge(&c).add(&signed(b.wedge(&br(&a, &c)), sign((i + 1) * j)));
        prop_assert_eq!(lhs, rhs);
    }
}

fn triple_mv() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    let (reg, _) = c3();
    triple().prop_flat_map(move |(i, j, k)| (homogeneous(&reg, i), homogeneous(&reg, j), homogeneous(&reg, k)))
}

fn pair() -> impl Strategy<Value = (Multivector, Multivector)> {
    let (reg, _) = c3();
    (0usize..=3, 0usize..=3).prop_flat_map(move |(i, j)| (homogeneous(&reg, i), homogeneous(&reg, j)))
}

fn dbar_legs(reg: &GeneratorRegistry) -> Vec<OddId> {
    reg.holomorphic_coords().into_iter().map(|z| reg.dbar_form(z).unwrap()).collect()
}

fn two_forms() -> impl Strategy<Value = Multivector> {
    let (reg, cy) = c2();
    common::multivector(reg.clone(), all_vars(&reg), dbar_legs(&reg), None, 4)
        .prop_map(move |b| cy.omega().wedge(&b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn homotopy_identity(alpha in two_forms()) {
        let (_, cy) = c2();
        let pi = cy.omega_inv();
        let conjugated = omega_flat(&divergence(&omega_sharp(&alpha, &cy).unwrap(), &cy).unwrap(), &cy).unwrap();
        let d = |a: &Multivector| de_rham_holomorphic(a, &cy);
        let ip = |a: &Multivector| iota_pi(a, &pi).unwrap();
        let comm = d(&ip(&alpha)).sub(&ip(&d(&alpha)));
        prop_assert_eq!(conjugated, comm);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn poisson_bivector_bracket_splits(m in mixed(&c3().0)) {
        let (reg, cy) = c3();
        let (u, v) = (reg.var("u").unwrap(), reg.var("v").unwrap());
        let (tu, tv) = (Multivector::odd(&reg, reg.theta(u).unwrap()), Multivector::odd(&reg, reg.theta(v).unwrap()));
        let pi = tu.wedge(&tv);
        let lhs = sn_bracket(&pi, &m, &cy).unwrap();
        // [D_u ^ D_v, m] = D_v ^ d_u m - D_u ^ d_v m
        let rhs = tv.wedge(&m.even_derivative(u)).sub(&tu.wedge(&m.even_derivative(v)));
        prop_assert_eq!(lhs, rhs);
    }
}

fn functions_c2() -> impl Strategy<Value = Multivector> {
    let (reg, _) = c2();
    common::multivector(reg.clone(), all_vars(&reg), vec![], Some(0), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn flat_map_intertwines_bracket_with_de_rham_on_functions(f in functions_c2()) {
        let (_, cy) = c2();
        let pi = cy.omega_inv();
        let lhs = omega_flat(&sn_bracket(&pi, &f, &cy).unwrap(), &cy).unwrap();
        prop_assert_eq!(lhs, de_rham_holomorphic(&f, &cy));
    }

    #[test]
    fn flat_map_intertwines_bracket_with_de_rham_on_vectors(f in functions_c2()) {
        let (reg, cy) = c2();
        let pi = cy.omega_inv();
        let x = f.wedge(&Multivector::odd(&reg, cy.thetas()[0]));
        let lhs = omega_flat(&sn_bracket(&pi, &x, &cy).unwrap(), &cy).unwrap();
        let rhs = de_rham_holomorphic(&omega_flat(&x, &cy).unwrap(), &cy);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bivector_bracket_is_divergence_of_product(f in functions_c2()) {
        let (_, cy) = c2();
        let pi = cy.omega_inv();
        prop_assert_eq!(sn_bracket(&pi, &f, &cy).unwrap(), divergence(&f.wedge(&pi), &cy).unwrap());
    }

    #[test]
    fn flat_and_sharp_are_inverse(alpha in two_forms()) {
        let (_, cy) = c2();
        let mu = omega_sharp(&alpha, &cy).unwrap();
        prop_assert_eq!(omega_flat(&mu, &cy).unwrap(), alpha);
    }

    #[test]
    fn bracket_matches_classical_schouten((a, b) in low_pair()) {
        let (_, cy) = c3();
        let expected = schouten_oracle(&a, &b, &cy).unwrap();
        let s = sign((deg(&a) + 1) * deg(&b));
        prop_assert_eq!(sn_bracket(&a, &b, &cy).unwrap(), signed(expected, s));
    }

    #[test]
    fn contraction_round_trip(m in mixed(&c3().0)) {
        let (_, cy) = c3();
        let back = uncontract_with_cy(&contract_with_cy(&m, &cy), &cy);
        prop_assert_eq!(back, m);
    }

    #[test]
    fn contraction_changes_sign_with_ordering(m in mixed(&c3().0)) {
        let (reg, cy) = c3();
        let odd_perm = CalabiYauOrdering::new(&reg, &["v", "u", "w"]).unwrap();
        let even_perm = CalabiYauOrdering::new(&reg, &["v", "w", "u"]).unwrap();
        prop_assert_eq!(contract_with_cy(&m, &odd_perm), contract_with_cy(&m, &cy).neg());
        prop_assert_eq!(contract_with_cy(&m, &even_perm), contract_with_cy(&m, &cy));
        prop_assert_eq!(odd_perm.omega_inv(), cy.omega_inv().neg());
    }

    #[test]
    fn twisted_differential_squares_to_zero(m in mixed(&c3().0)) {
        let (reg, cy) = c3();
        let pi = Multivector::odd(&reg, cy.thetas()[0]).wedge(&Multivector::odd(&reg, cy.thetas()[1]));
        let once = twisted_differential(&m, &pi, &cy).unwrap();
        prop_assert!(twisted_differential(&once, &pi, &cy).unwrap().is_zero());
    }

    #[test]
    fn top_primitive_inverts_divergence(f in functions_c2()) {
        let (_, cy) = c2();
        let mu = divergence(&f.wedge(&cy.omega_inv()), &cy).unwrap();
        prop_assume!(!mu.is_zero());
        let g = top_primitive(&mu, &cy).unwrap();
        prop_assert_eq!(divergence(&g.wedge(&cy.omega_inv()), &cy).unwrap(), mu);
        let diff = f.sub(&g);
        let constant_in_cy = diff.terms().all(|(_, c)| cy.coords().iter().all(|&z| !c.depends_on(z)));
        prop_assert!(constant_in_cy);
    }
}

fn low_pair() -> impl Strategy<Value = (Multivector, Multivector)> {
    let (reg, _) = c3();
    (0usize..=1, 0usize..=1).prop_map(|(i, j)| (i, j)).prop_flat_map(move |(i, j)| (homogeneous(&reg, i), homogeneous(&reg, j)))
}
