use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Multivector, RatFunc};
use polyvector_calculus::*;

struct Ctx {
    reg: Arc<GeneratorRegistry>,
}

impl Ctx {
    fn new(coords: &[&str]) -> Self {
        Ctx { reg: GeneratorRegistry::builder().coordinates(coords).build() }
    }
    fn cy(&self, names: &[&str]) -> CalabiYauOrdering {
        CalabiYauOrdering::new(&self.reg, names).unwrap()
    }
    fn x(&self, name: &str) -> Multivector {
        Multivector::var(&self.reg, self.reg.var(name).unwrap())
    }
    fn odd(&self, name: &str) -> Multivector {
        Multivector::odd(&self.reg, self.reg.odd_by_name(name).unwrap())
    }
    fn n(&self, k: i64) -> Multivector {
        Multivector::scalar(&self.reg, RatFunc::from_int(k))
    }
}

#[test]
fn dolbeault_examples() {
    let c = Ctx::new(&["z", "v", "w1"]);
    assert_eq!(dolbeault(&c.x("z").wedge(&c.x("z~"))).to_text(), "z*dbz");
    assert!(dolbeault(&c.x("w1").wedge(&c.odd("Dw1"))).is_zero());
    let v = c.reg.var("v").unwrap();
    let vb = c.reg.var("v~").unwrap();
    let q = RatFunc::var(vb).div(&RatFunc::var(v).mul(&RatFunc::var(vb)));
    assert!(dolbeault(&Multivector::scalar(&c.reg, q)).is_zero());
}

#[test]
fn divergence_examples() {
    let c = Ctx::new(&["u", "v", "w1", "w2"]);
    let uv = c.cy(&["u", "v"]);
    let w = c.cy(&["w1", "w2"]);
    assert_eq!(divergence(&c.x("u").wedge(&c.odd("Du")), &uv).unwrap(), c.n(1));
    assert!(divergence(&c.odd("Du").wedge(&c.odd("Dv")), &uv).unwrap().is_zero());
    let m = c.x("w1").wedge(&c.odd("Dw1")).wedge(&c.odd("Dw2"));
    assert_eq!(divergence(&m, &w).unwrap(), c.odd("Dw2"));
    assert_eq!(
        divergence(&c.odd("Du"), &w),
        Err(CalculusError::ForeignPolyvectorLeg("Du".into()))
    );
}

#[test]
fn logarithmic_divergence() {
    let c = Ctx::new(&["z", "w1"]);
    let cy = c.cy(&["z", "w1"]).with_log("z");
    let zdz = c.x("z").wedge(&c.odd("Dz"));
    assert!(divergence(&zdz, &cy).unwrap().is_zero());
    assert!(divergence(&cy.omega_inv(), &cy).unwrap().is_zero());
    assert_eq!(cy.omega_inv(), zdz.wedge(&c.odd("Dw1")));
    assert_eq!(divergence(&c.odd("Dz"), &cy).unwrap().to_text(), "-1/z");
}

#[test]
fn bracket_examples() {
    let c = Ctx::new(&["u", "v", "w1", "w2"]);
    let uv = c.cy(&["u", "v"]);
    let w = c.cy(&["w1", "w2"]);
    let pi = c.odd("Du").wedge(&c.odd("Dv"));
    assert_eq!(sn_bracket(&pi, &c.x("u"), &uv).unwrap(), c.odd("Dv"));
    assert!(sn_bracket(&c.odd("Du"), &c.odd("Dv"), &uv).unwrap().is_zero());
    let piw = w.omega_inv();
    assert_eq!(poisson_bracket(&c.x("w1"), &c.x("w2"), &piw, &w).unwrap(), c.n(1));
    assert!(sn_bracket(&c.x("w1"), &c.x("w2"), &w).unwrap().is_zero());
    let inhom = c.x("u").add(&c.odd("Du"));
    assert_eq!(sn_bracket(&inhom, &c.x("u"), &uv), Err(CalculusError::Inhomogeneous));
}

#[test]
fn contraction_examples() {
    let c = Ctx::new(&["w1", "w2"]);
    let w = c.cy(&["w1", "w2"]);
    assert_eq!(contract_with_cy(&c.odd("Dw1").wedge(&c.odd("Dw2")), &w), c.n(1));
    assert_eq!(contract_with_cy(&c.n(1), &w), w.omega());
    assert_eq!(contract_with_cy(&c.odd("Dw1"), &w), c.odd("dw2"));
    assert_eq!(contract_with_cy(&c.odd("Dw2"), &w), c.odd("dw1").neg());
}

#[test]
fn iota_examples() {
    let c = Ctx::new(&["u", "v"]);
    let pi = c.odd("Du").wedge(&c.odd("Dv"));
    let dudv = c.odd("du").wedge(&c.odd("dv"));
    assert_eq!(iota_pi(&dudv, &pi).unwrap(), c.n(1));
    assert!(iota_pi(&c.odd("du"), &pi).unwrap().is_zero());
    let f = c.x("u").wedge(&c.x("v~"));
    assert_eq!(iota_pi(&f.wedge(&dudv), &pi).unwrap(), f);
    assert_eq!(iota_pi(&dudv, &c.x("u").wedge(&pi)), Err(CalculusError::NotConstantBivector));
}

#[test]
fn twisted_differential_examples() {
    let c = Ctx::new(&["u", "v"]);
    let uv = c.cy(&["u", "v"]);
    let pi = c.odd("Du").wedge(&c.odd("Dv"));
    assert_eq!(twisted_differential(&c.x("u"), &pi, &uv).unwrap(), c.odd("Dv"));
    assert!(twisted_differential(&pi, &pi, &uv).unwrap().is_zero());
    let bad = c.odd("Du").wedge(&c.odd("dbv"));
    assert_eq!(twisted_differential(&c.x("u"), &bad, &uv), Err(CalculusError::NotConstantBivector));
}

#[test]
fn primitive_examples() {
    let c = Ctx::new(&["u", "w1", "w2"]);
    let w = c.cy(&["w1", "w2"]);
    assert_eq!(top_primitive(&c.odd("Dw2"), &w).unwrap(), c.x("w1"));
    assert_eq!(top_primitive(&c.odd("Dw1"), &w).unwrap(), c.x("w2").neg());
    let uw = c.cy(&["u", "w1"]);
    assert!(matches!(top_primitive(&c.x("u").wedge(&c.odd("Du")), &uw), Err(CalculusError::NotClosed(_))));
    assert_eq!(top_primitive(&c.n(1), &w), Err(CalculusError::WrongDegree { expected: 1 }));
}

#[test]
fn schouten_oracle_examples() {
    let c = Ctx::new(&["u", "v"]);
    let uv = c.cy(&["u", "v"]);
    let x = c.x("v").wedge(&c.odd("Du"));
    let f = c.x("u").wedge(&c.x("u"));
    let two_uv = c.x("u").wedge(&c.x("v")).scale_rat(&RatFunc::from_int(2));
    assert_eq!(schouten_oracle(&x, &f, &uv).unwrap(), two_uv);
    assert_eq!(schouten_oracle(&f, &x, &uv).unwrap(), two_uv.neg());
    assert!(schouten_oracle(&c.odd("Du").wedge(&c.odd("Dv")), &f, &uv).is_none());
}
