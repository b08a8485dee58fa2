use std::sync::OnceLock;

use graded_algebra::linalg::SparseRow;
use graded_algebra::{Multivector, Scalar};
use polyvector_calculus::{sn_bracket, CalabiYauOrdering};
use susy_residual::{build_siso, gamma_top_wedge, q_cohomology, QCohomology, ResMap, Siso, Summand, SO_DIM, SPINOR_DIM, VEC_DIM};

struct Fixture {
    siso: Siso,
    coh: QCohomology,
    res: ResMap,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let siso = build_siso().expect("siso builds and satisfies Jacobi");
        let coh = q_cohomology(&siso.algebra, &siso.standard_supercharge()).unwrap();
        let res = ResMap::new(&siso, &coh).unwrap();
        Fixture { siso, coh, res }
    })
}

fn vector(k: usize) -> SparseRow {
    SparseRow::from([(k, Scalar::one())])
}

#[test]
fn gamma_plus_is_equivariant_and_normalized() {
    let f = fixture();
    let m = &f.siso.module;
    let g = &f.siso.gamma;
    assert_eq!(g.equivariance_residual(m), 0);
    let vac = m.spinor_index(0).unwrap();
    assert!(g.basis(vac, vac).is_empty());
    for i in 0..5 {
        for j in i + 1..5 {
            assert!(g.basis(vac, m.spinor_index((1 << i) | (1 << j)).unwrap()).is_empty());
        }
    }
    assert_eq!(g.basis(vac, m.spinor_index(0b01111).unwrap()), vector(9));
}

#[test]
fn gamma_plus_matches_top_wedge_pairing_up_to_scale() {
    let f = fixture();
    let m = &f.siso.module;
    let mut ratio: Option<Scalar> = None;
    for s in 0..SPINOR_DIM {
        for t in 0..SPINOR_DIM {
            let solved = f.siso.gamma.basis(s, t);
            let oracle = gamma_top_wedge(m, s, t);
            assert_eq!(solved.keys().collect::<Vec<_>>(), oracle.keys().collect::<Vec<_>>());
            for (k, v) in &solved {
                let r = &oracle[k] / v;
                match &ratio {
                    None => ratio = Some(r),
                    Some(r0) => assert_eq!(&r, r0),
                }
            }
        }
    }
    assert!(ratio.is_some());
}

#[test]
fn siso_dimensions_and_brackets() {
    let f = fixture();
    let alg = &f.siso.algebra;
    assert_eq!(alg.sdim(), (55, 32));
    let q = f.siso.standard_supercharge();
    assert!(alg.bracket(&q, &q).is_empty());
    assert!(alg.bracket(&f.siso.spinor_element(0, 0), &f.siso.spinor_element(0, 1)).is_empty());
    for k in 0..VEC_DIM {
        for s in 0..SPINOR_DIM {
            assert!(alg.basis_bracket(Siso::translation(k), Siso::spinor(s, 0)).is_empty());
        }
    }
}

#[test]
fn supercharge_is_sl5_invariant() {
    let f = fixture();
    let alg = &f.siso.algebra;
    let q = f.siso.standard_supercharge();
    for (k, (label, _)) in f.siso.module.so.iter().enumerate() {
        let traceless = label.starts_with('E') && label.as_bytes()[1] != label.as_bytes()[2];
        if traceless {
            assert!(alg.bracket(&vector(Siso::so(k)), &q).is_empty(), "{}", label);
        }
    }
    let h1 = alg.index("E11").unwrap();
    let h2 = alg.index("E22").unwrap();
    let mut diff = vector(h1);
    diff.insert(h2, Scalar::from_int(-1));
    assert!(alg.bracket(&diff, &q).is_empty());
}

#[test]
fn cohomology_dimensions() {
    let f = fixture();
    let coh = &f.coh;
    assert_eq!(coh.sdim, (39, 16));
    let so_rank = coh.rank_on(0..SO_DIM);
    assert_eq!(SO_DIM - so_rank, 34);
    let spinors: Vec<usize> = (0..2 * SPINOR_DIM).map(|k| SO_DIM + VEC_DIM + k).collect();
    let spinor_rank = coh.rank_on(spinors.clone());
    assert_eq!(spinors.len() - spinor_rank, 27);
    assert_eq!(so_rank, 11);
    assert_eq!(spinor_rank, 5);
}

#[test]
fn image_in_translations_is_v_dual() {
    let f = fixture();
    let coh = &f.coh;
    let m = &f.siso.module;
    let wedge4: Vec<usize> = (0..5).map(|i| Siso::spinor(m.spinor_index(0b11111 & !(1 << i)).unwrap(), 0)).collect();
    assert_eq!(coh.rank_on(wedge4.clone()), 5);
    for k in 0..5 {
        assert!(coh.is_exact(&vector(Siso::translation(5 + k))));
        assert!(!coh.is_exact(&vector(Siso::translation(k))));
    }
}

#[test]
fn zero_supercharge_keeps_everything() {
    let f = fixture();
    let coh = q_cohomology(&f.siso.algebra, &SparseRow::new()).unwrap();
    assert_eq!(coh.sdim, (55, 32));
}

#[test]
fn stabilizer_nilradical_is_abelian_ideal() {
    let f = fixture();
    let alg = &f.siso.algebra;
    let coh = &f.coh;
    let nil: Vec<usize> = (0..SO_DIM).filter(|&k| alg.label(k).starts_with('M')).collect();
    assert_eq!(nil.len(), 10);
    let stab: Vec<usize> = (0..SO_DIM).filter(|&k| coh.differential(k).is_empty()).collect();
    for &a in &nil {
        assert!(stab.contains(&a));
        for &b in &nil {
            assert!(alg.basis_bracket(a, b).is_empty());
        }
        for &s in &stab {
            assert!(alg.basis_bracket(s, a).keys().all(|k| nil.contains(k)));
        }
    }
}

#[test]
fn res_examples() {
    let f = fixture();
    let reg = &f.res.registry;
    let th = |n: &str| Multivector::odd(reg, reg.theta(reg.var(n).unwrap()).unwrap());
    let z = |n: &str| Multivector::var(reg, reg.var(n).unwrap());
    let r = |mask: usize| f.res.res_map(&f.siso.spinor_element(mask, 1)).unwrap();
    assert_eq!(r(0b00011), th("z1").wedge(&th("z2")));
    assert_eq!(r(0b11011), z("z3"));
    assert!(r(0).is_zero());
    assert!(f.res.res_map(&f.siso.spinor_element(0b01111, 0)).is_err());
}

#[test]
fn res_is_sl5_equivariant() {
    let f = fixture();
    let alg = &f.siso.algebra;
    let reg = &f.res.registry;
    let cy = CalabiYauOrdering::new(reg, &["z1", "z2", "z3", "z4", "z5"]).unwrap();
    for a in f.res.entries.iter().filter(|e| e.summand == Summand::Sl5) {
        for h in &f.res.entries {
            let lhs = f.res.res_map(&alg.bracket(&a.cocycle, &h.cocycle)).unwrap();
            let rhs = sn_bracket(&a.image, &h.image, &cy).unwrap();
            assert_eq!(lhs, rhs, "[{}, {}]", a.label, h.label);
        }
    }
}

#[test]
fn res_fails_to_preserve_the_odd_bracket() {
    let f = fixture();
    let alg = &f.siso.algebra;
    let reg = &f.res.registry;
    let cy = CalabiYauOrdering::new(reg, &["z1", "z2", "z3", "z4", "z5"]).unwrap();
    let v = f.res.entry("a3").unwrap();
    let dz = f.res.entries.iter().find(|e| e.summand == Summand::OddVDual && !e.label.contains("a3")).unwrap();
    let class = f.coh.bracket(alg, &v.cocycle, &dz.cocycle).unwrap();
    assert!(class.iter().all(|c| c.is_zero()));
    let image = sn_bracket(&v.image, &dz.image, &cy).unwrap();
    assert!(!image.is_zero());
}
